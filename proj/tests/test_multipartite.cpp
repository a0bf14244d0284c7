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

#include "planedec/multipartite.hpp"

#include <doctest.h>

using namespace planedec;

TEST_CASE("vertex labels parse and print") {
  CHECK(VertexRef::parse("x1") == VertexRef::x1());
  CHECK(VertexRef::parse("x2") == VertexRef::x2());
  CHECK(VertexRef::parse("u7") == VertexRef::u(7));
  CHECK(VertexRef::parse("v12") == VertexRef::v(12));
  CHECK(VertexRef::u(7).label() == "u7");
  CHECK(VertexRef::x2().label() == "x2");
  CHECK_THROWS_AS(VertexRef::parse("w3"), InvalidInputError);
  CHECK_THROWS_AS(VertexRef::parse("u0"), InvalidInputError);
  CHECK_THROWS_AS(VertexRef::parse("u01"), InvalidInputError);
  CHECK_THROWS_AS(VertexRef::parse("x3"), InvalidInputError);
  CHECK_THROWS_AS(VertexRef::parse(""), InvalidInputError);
}

TEST_CASE("vertex order is x1 < x2 < u < v, then by index") {
  CHECK(VertexRef::x1() < VertexRef::x2());
  CHECK(VertexRef::x2() < VertexRef::u(1));
  CHECK(VertexRef::u(9) < VertexRef::v(1));
  CHECK(VertexRef::u(2) < VertexRef::u(10));
}

TEST_CASE("edges canonicalize their endpoints") {
  Edge e(VertexRef::v(3), VertexRef::u(5));
  CHECK(e.a == VertexRef::u(5));
  CHECK(e.b == VertexRef::v(3));
  CHECK(Edge(VertexRef::u(1), VertexRef::v(1)) == Edge(VertexRef::v(1), VertexRef::u(1)));
  CHECK_THROWS_AS(Edge(VertexRef::u(4), VertexRef::u(4)), InvalidInputError);
}

TEST_CASE("pages refuse duplicate insertions") {
  Page p;
  p.add(Edge(VertexRef::u(1), VertexRef::v(1)));
  CHECK_THROWS_AS(p.add(Edge(VertexRef::v(1), VertexRef::u(1))), InvalidInputError);
  CHECK(p.add_if_absent(Edge(VertexRef::u(1), VertexRef::v(1))) == false);
  CHECK(p.size() == 1);
  p.remove(Edge(VertexRef::u(1), VertexRef::v(1)));
  CHECK(p.empty());
  CHECK_THROWS_AS(p.remove(Edge(VertexRef::u(1), VertexRef::v(1))), InvalidInputError);
}

TEST_CASE("complete multipartite edge sets") {
  SUBCASE("two singleton parts give one edge") {
    auto edges = complete_multipartite_edges({1, 1});
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == Edge(VertexRef::u(1), VertexRef::v(1)));
  }
  SUBCASE("[1,2,2] has 8 edges") {
    CHECK(complete_multipartite_edges({1, 2, 2}).size() == 8);
  }
  SUBCASE("[2,2,2] is the octahedron") {
    auto edges = complete_multipartite_edges({2, 2, 2});
    CHECK(edges.size() == 12);
    // x1 and x2 share a part, so they are not adjacent
    for (const Edge& e : edges) {
      CHECK_FALSE((e.a == VertexRef::x1() && e.b == VertexRef::x2()));
    }
  }
  SUBCASE("[1,1,n,n] keeps the x1-x2 edge") {
    auto edges = complete_multipartite_edges({1, 1, 2, 2});
    CHECK(std::find(edges.begin(), edges.end(),
                    Edge(VertexRef::x1(), VertexRef::x2())) != edges.end());
  }
  SUBCASE("rejects unsupported shapes") {
    CHECK_THROWS_AS(complete_multipartite_edges({}), InvalidInputError);
    CHECK_THROWS_AS(complete_multipartite_edges({0, 2}), InvalidInputError);
    CHECK_THROWS_AS(complete_multipartite_edges({1, 1, 1, 1, 1}), InvalidInputError);
    CHECK_THROWS_AS(complete_multipartite_edges({3, 2, 2}), InvalidInputError);
  }
}

TEST_CASE("edge_count closed form") {
  CHECK(edge_count({1, 3, 3}) == 15);
  CHECK(edge_count({2, 17, 17}) == 357);
  CHECK(edge_count({1, 1, 5, 5}) == 46);
  CHECK(edge_count({1, 1}) == 1);
}

TEST_CASE("edge_count matches the constructed edge set for every family") {
  const GraphFamily families[] = {GraphFamily::knn(), GraphFamily::k1nn(),
                                  GraphFamily::k2nn(), GraphFamily::k11nn()};
  for (const GraphFamily& family : families) {
    for (int n = 1; n <= 60; ++n) {
      auto sizes = family.part_sizes(n);
      CAPTURE(family.name());
      CAPTURE(n);
      CHECK(edge_count(sizes) ==
            static_cast<long long>(complete_multipartite_edges(sizes).size()));
    }
  }
}

TEST_CASE("thickness formula reference values") {
  CHECK(thickness_formula(GraphFamily::k1nn(), 18) == 5);
  CHECK(thickness_formula(GraphFamily::k2nn(), 17) == 5);
  CHECK(thickness_formula(GraphFamily::k11nn(), 1) == 1);
  CHECK(thickness_formula(GraphFamily::k1nn(), 2) == 1);
  CHECK(thickness_formula(GraphFamily::knn(), 4) == 2);
  CHECK_THROWS_AS(thickness_formula(GraphFamily::custom({1, 2, 2}), 2),
                  InvalidInputError);
  CHECK_THROWS_AS(thickness_formula(GraphFamily::k1nn(), 0), InvalidInputError);
}

TEST_CASE("thickness formula is monotone and family-ordered") {
  const GraphFamily families[] = {GraphFamily::knn(), GraphFamily::k1nn(),
                                  GraphFamily::k2nn(), GraphFamily::k11nn()};
  for (const GraphFamily& family : families) {
    for (int n = 1; n < 60; ++n) {
      CHECK(thickness_formula(family, n) <= thickness_formula(family, n + 1));
    }
  }
  for (int n = 1; n <= 60; ++n) {
    CHECK(thickness_formula(GraphFamily::k2nn(), n) >=
          thickness_formula(GraphFamily::k1nn(), n));
  }
}

TEST_CASE("euler lower bound") {
  CHECK(euler_lower_bound(5, 10) == 2);   // K_5
  CHECK(euler_lower_bound(6, 12) == 1);   // octahedron fits 3v-6 exactly
  CHECK(euler_lower_bound(4, 6) == 1);    // K_4
  CHECK(euler_lower_bound(2, 1) == 1);    // degenerate v < 3
}

TEST_CASE("euler bound never exceeds the formula") {
  const GraphFamily families[] = {GraphFamily::k1nn(), GraphFamily::k2nn(),
                                  GraphFamily::k11nn()};
  for (const GraphFamily& family : families) {
    for (int n = 1; n <= 60; ++n) {
      auto sizes = family.part_sizes(n);
      long long v = 0;
      for (int s : sizes) v += s;
      CHECK(euler_lower_bound(v, edge_count(sizes)) <= thickness_formula(family, n));
    }
  }
}

TEST_CASE("ambient parts and label fitting") {
  std::vector<int> k2nn = {2, 5, 5};
  CHECK(ambient_part(k2nn, VertexRef::x1()) == ambient_part(k2nn, VertexRef::x2()));
  CHECK(label_fits(k2nn, VertexRef::u(5)));
  CHECK_FALSE(label_fits(k2nn, VertexRef::u(6)));
  std::vector<int> k11nn = {1, 1, 3, 3};
  CHECK(ambient_part(k11nn, VertexRef::x1()) != ambient_part(k11nn, VertexRef::x2()));
  std::vector<int> knn = {4, 4};
  CHECK_FALSE(label_fits(knn, VertexRef::x1()));
  CHECK_THROWS_AS(ambient_part(knn, VertexRef::x1()), InvalidInputError);
}

TEST_CASE("family names round-trip") {
  for (const char* name : {"knn", "k1nn", "k2nn", "k11nn"}) {
    CHECK(GraphFamily::parse(name).name() == name);
  }
  CHECK_THROWS_AS(GraphFamily::parse("k3nn"), InvalidInputError);
}
