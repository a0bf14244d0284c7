// Copyright 2026 The planedec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planedec/constructions.hpp"

#include <doctest.h>

#include <set>

#include "planedec/base_decomposition.hpp"
#include "planedec/planarity.hpp"
#include "planedec/verify.hpp"

using namespace planedec;

namespace {

std::set<VertexRef> neighbors_in_page(const Page& page, VertexRef center) {
  std::set<VertexRef> out;
  for (const Edge& e : page.edges()) {
    if (e.a == center) out.insert(e.b);
    if (e.b == center) out.insert(e.a);
  }
  return out;
}

std::set<VertexRef> us(std::initializer_list<int> idx) {
  std::set<VertexRef> out;
  for (int i : idx) out.insert(VertexRef::u(i));
  return out;
}

std::set<VertexRef> vs(std::initializer_list<int> idx) {
  std::set<VertexRef> out;
  for (int i : idx) out.insert(VertexRef::v(i));
  return out;
}

std::set<VertexRef> join(std::set<VertexRef> a, const std::set<VertexRef>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("anchor case selection") {
  CHECK(anchor_case_for(0) == AnchorCase::Small);
  CHECK(anchor_case_for(3) == AnchorCase::Small);
  CHECK(anchor_case_for(4) == AnchorCase::EvenGeneric);
  CHECK(anchor_case_for(6) == AnchorCase::EvenGeneric);
  CHECK(anchor_case_for(5) == AnchorCase::OddGeneric);
  CHECK(anchor_case_for(9) == AnchorCase::OddGeneric);
  CHECK_THROWS_AS(anchor_case_for(-1), InvalidInputError);
}

TEST_CASE("anchor sizes preserve the formula value") {
  CHECK(anchor_n(GraphFamily::k1nn(), 18) == 18);
  CHECK(anchor_n(GraphFamily::k2nn(), 4) == 5);
  CHECK(anchor_n(GraphFamily::k11nn(), 7) == 9);
  for (int n = 1; n <= 60; ++n) {
    for (GraphFamily family :
         {GraphFamily::k1nn(), GraphFamily::k2nn(), GraphFamily::k11nn()}) {
      int m = anchor_n(family, n);
      CHECK(m >= n);
      CHECK(thickness_formula(family, m) == thickness_formula(family, n));
    }
  }
}

TEST_CASE("single-apex block page r=1, p=4") {
  Page page = k1nn_block_page(1, 4, AnchorCase::EvenGeneric);
  CHECK(neighbors_in_page(page, VertexRef::x1()) ==
        join(us({1, 3, 4, 10}), vs({1, 2, 3, 5})));
  CHECK(neighbors_in_page(page, VertexRef::v(17)) == us({15, 16}));
  CHECK(neighbors_in_page(page, VertexRef::v(18)) == us({11, 12}));
  CHECK(neighbors_in_page(page, VertexRef::u(17)) == vs({14, 16}));
  CHECK(neighbors_in_page(page, VertexRef::u(18)) == vs({10, 12}));
  // the two freed edges are gone from the block page
  CHECK_FALSE(page.contains(Edge(VertexRef::v(1), VertexRef::u(4))));
  CHECK_FALSE(page.contains(Edge(VertexRef::u(4), VertexRef::v(3))));
  // and the base page had them
  CHECK(base_pages(4)[0].contains(Edge(VertexRef::v(1), VertexRef::u(4))));
  CHECK(is_planar(page));
}

TEST_CASE("single-apex block page r=2, p=4") {
  Page page = k1nn_block_page(2, 4, AnchorCase::EvenGeneric);
  CHECK(neighbors_in_page(page, VertexRef::x1()) ==
        join(us({5, 6, 8, 15}), vs({6, 7, 8, 12})));
  CHECK_FALSE(page.contains(Edge(VertexRef::v(8), VertexRef::u(5))));
  CHECK_FALSE(page.contains(Edge(VertexRef::u(5), VertexRef::v(6))));
  CHECK(is_planar(page));
}

TEST_CASE("freed edges reappear in the final page") {
  Page last = k1nn_final_page(4, AnchorCase::EvenGeneric);
  for (int r : {1, 3}) {
    CHECK(last.contains(Edge(VertexRef::v(4 * r - 3), VertexRef::u(4 * r))));
    CHECK(last.contains(Edge(VertexRef::u(4 * r), VertexRef::v(4 * r - 1))));
  }
  for (int r : {2, 4}) {
    CHECK(last.contains(Edge(VertexRef::v(4 * r), VertexRef::u(4 * r - 3))));
    CHECK(last.contains(Edge(VertexRef::u(4 * r - 3), VertexRef::v(4 * r - 2))));
  }
}

TEST_CASE("single-apex final page p=4") {
  Page last = k1nn_final_page(4, AnchorCase::EvenGeneric);
  for (int j = 1; j <= 18; ++j) {
    CHECK(last.contains(Edge(VertexRef::u(j), VertexRef::v(j))));
  }
  CHECK(neighbors_in_page(last, VertexRef::v(17)) ==
        join(us({1, 2, 3, 4, 9, 10, 11, 12, 17, 18}), {VertexRef::x1()}));
  CHECK(is_planar(last));
}

TEST_CASE("single-apex final page p=5 keeps the extra freed edge") {
  Page last = k1nn_final_page(5, AnchorCase::OddGeneric);
  CHECK(last.contains(Edge(VertexRef::u(1), VertexRef::v(2))));
  CHECK(is_planar(last));
}

TEST_CASE("single-apex anchors verify for p up to 9") {
  for (int p = 0; p <= 9; ++p) {
    CAPTURE(p);
    Decomposition d = k1nn_anchor(p);
    CHECK(static_cast<int>(d.pages.size()) == p + 1);
    CHECK(d.n == 4 * p + 2);
    if (p == 4) {
      CHECK(d.pages[0].contains(Edge(VertexRef::x1(), VertexRef::u(10))));
      CHECK(d.pages[0].contains(Edge(VertexRef::x1(), VertexRef::v(5))));
    }
  }
}

TEST_CASE("double-apex block page r=1, p=4") {
  Page page = k2nn_block_page(1, 4, AnchorCase::EvenGeneric);
  CHECK(neighbors_in_page(page, VertexRef::x1()) ==
        join(us({3, 4, 9}), vs({1, 3, 5})));
  CHECK(neighbors_in_page(page, VertexRef::x2()) ==
        join(us({3, 4, 7}), vs({2, 4, 11})));
  CHECK(neighbors_in_page(page, VertexRef::u(17)) == vs({2, 3}));
  CHECK(neighbors_in_page(page, VertexRef::v(17)) == us({8, 12}));
  CHECK_FALSE(page.contains(Edge(VertexRef::v(1), VertexRef::u(4))));
  CHECK_FALSE(page.contains(Edge(VertexRef::u(3), VertexRef::v(2))));
  CHECK(is_planar(page));
}

TEST_CASE("double-apex anchors verify for p up to 9") {
  for (int p = 0; p <= 9; ++p) {
    CAPTURE(p);
    Decomposition d = k2nn_anchor(p);
    CHECK(static_cast<int>(d.pages.size()) == p + 1);
    CHECK(d.n == 4 * p + 1);
  }
}

TEST_CASE("apex-over-matching pages") {
  SUBCASE("p=1 with two apexes") {
    Decomposition d = apex_matching_pages(1, 2);
    CHECK(d.pages.size() == 2);
    CHECK(d.pages.back().size() == 4 + 2 * 8);
    CHECK(verify_decomposition(d, 2).overall);
  }
  SUBCASE("p=1 with one apex") {
    Decomposition d = apex_matching_pages(1, 1);
    CHECK(d.pages.size() == 2);
    CHECK(verify_decomposition(d, 2).overall);
  }
  SUBCASE("p=2 final page is planar") {
    Decomposition d = apex_matching_pages(2, 2);
    CHECK(is_planar(d.pages.back()));
  }
  SUBCASE("one apex equals two apexes minus x2") {
    for (int p : {1, 2, 3}) {
      Decomposition one = apex_matching_pages(p, 1);
      Decomposition two = apex_matching_pages(p, 2);
      REQUIRE(one.pages.size() == two.pages.size());
      for (std::size_t i = 0; i < one.pages.size(); ++i) {
        std::vector<Edge> stripped;
        for (const Edge& e : two.pages[i].edges()) {
          if (e.a != VertexRef::x2() && e.b != VertexRef::x2()) {
            stripped.push_back(e);
          }
        }
        CHECK(one.pages[i].edges() == stripped);
      }
    }
  }
}

TEST_CASE("adding the x1-x2 edge") {
  SUBCASE("on K_{2,5,5}") {
    Decomposition d = add_x1x2_edge(k2nn_small_case(1));
    CHECK(d.part_sizes == std::vector<int>{1, 1, 5, 5});
    CHECK(verify_decomposition(d, 2).overall);
    // the edge lives in exactly one page, the last
    int count = 0;
    Edge x1x2(VertexRef::x1(), VertexRef::x2());
    for (const Page& page : d.pages) count += page.contains(x1x2) ? 1 : 0;
    CHECK(count == 1);
    CHECK(d.pages.back().contains(x1x2));
  }
  SUBCASE("on K_{2,1,1}") {
    Decomposition d = add_x1x2_edge(k2nn_small_case(0));
    CHECK(verify_decomposition(d, 1).overall);  // K_4 in one page
  }
  SUBCASE("applying twice is an error") {
    Decomposition d = add_x1x2_edge(k2nn_small_case(1));
    CHECK_THROWS_AS(add_x1x2_edge(d), InvalidInputError);
  }
}

TEST_CASE("vertex deletion") {
  SUBCASE("K_{2,5,5} down to n=4") {
    Decomposition d = delete_to_n(k2nn_small_case(1), 4);
    CHECK(d.n == 4);
    CHECK(d.part_sizes == std::vector<int>{2, 4, 4});
    CHECK(static_cast<int>(d.pages.size()) == 2);
    CHECK(verify_decomposition(d, 2).overall);
  }
  SUBCASE("no-op at the current size") {
    Decomposition d = k2nn_small_case(1);
    Decomposition same = delete_to_n(d, d.n);
    CHECK(same.provenance == d.provenance);
    CHECK(same.pages.size() == d.pages.size());
    for (std::size_t i = 0; i < d.pages.size(); ++i) {
      CHECK(same.pages[i] == d.pages[i]);
    }
  }
  SUBCASE("K_{2,5,5} down to n=2 covers the octahedron in two pages") {
    Decomposition d = delete_to_n(k2nn_small_case(1), 2);
    CHECK(verify_decomposition(d).overall);
    CHECK(d.pages.size() == 2);
  }
  SUBCASE("deleting composes") {
    Decomposition d = k1nn_anchor(4);
    Decomposition through = delete_to_n(delete_to_n(d, 12), 7);
    Decomposition direct = delete_to_n(d, 7);
    REQUIRE(through.pages.size() == direct.pages.size());
    for (std::size_t i = 0; i < direct.pages.size(); ++i) {
      CHECK(through.pages[i] == direct.pages[i]);
    }
  }
  SUBCASE("bad targets") {
    Decomposition d = k2nn_small_case(1);
    CHECK_THROWS_AS(delete_to_n(d, 0), InvalidInputError);
    CHECK_THROWS_AS(delete_to_n(d, 6), InvalidInputError);
  }
}

TEST_CASE("generate dispatches every family") {
  SUBCASE("K_{n,n} multiples of four") {
    Decomposition d = generate(GraphFamily::knn(), 8);
    CHECK(d.pages.size() == 3);
    CHECK_THROWS_AS(generate(GraphFamily::knn(), 6), InvalidInputError);
  }
  SUBCASE("K_{1,18,18} spot check") {
    Decomposition d = generate(GraphFamily::k1nn(), 18);
    CHECK(d.pages.size() == 5);
  }
  SUBCASE("K_{1,1,5,5} carries the apex edge in its last page") {
    Decomposition d = generate(GraphFamily::k11nn(), 5);
    CHECK(d.pages.size() == 2);
    Edge x1x2(VertexRef::x1(), VertexRef::x2());
    CHECK(d.pages.back().contains(x1x2));
    CHECK_FALSE(d.pages.front().contains(x1x2));
  }
  SUBCASE("K_{2,2,2} still gets the 2-page decomposition") {
    Decomposition d = generate(GraphFamily::k2nn(), 2);
    CHECK(d.pages.size() == 2);
  }
  SUBCASE("sweep 1..20 for the three ladder families") {
    for (GraphFamily family :
         {GraphFamily::k1nn(), GraphFamily::k2nn(), GraphFamily::k11nn()}) {
      for (int n = 1; n <= 20; ++n) {
        CAPTURE(family.name());
        CAPTURE(n);
        Decomposition d = generate(family, n);
        CHECK(static_cast<int>(d.pages.size()) == thickness_formula(family, n));
        long long total = 0;
        for (const Page& page : d.pages) total += static_cast<long long>(page.size());
        CHECK(total == edge_count(family.part_sizes(n)));
        if (family.tag == FamilyTag::K11NN) {
          Edge x1x2(VertexRef::x1(), VertexRef::x2());
          for (std::size_t i = 0; i + 1 < d.pages.size(); ++i) {
            CHECK_FALSE(d.pages[i].contains(x1x2));
          }
          CHECK(d.pages.back().contains(x1x2));
        }
      }
    }
  }
}

TEST_CASE("local search re-discovers a small decomposition") {
  auto found = rediscover_pages({1, 6, 6}, 2, /*seed=*/7, /*max_steps=*/400000);
  REQUIRE(found.has_value());
  CHECK(verify_decomposition({1, 6, 6}, *found, 2).overall);
}
