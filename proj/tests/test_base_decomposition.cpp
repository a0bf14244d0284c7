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

#include "planedec/base_decomposition.hpp"

#include <doctest.h>

#include <algorithm>

#include "planedec/planarity.hpp"
#include "planedec/verify.hpp"

using namespace planedec;

TEST_CASE("subscript normalization") {
  CHECK(normalize_subscript(16 + 10, 4) == 10);
  CHECK(normalize_subscript(16, 4) == 16);  // representative is 4p, not 0
  CHECK(normalize_subscript(1, 4) == 1);
  CHECK(normalize_subscript(0, 4) == 16);
  CHECK(normalize_subscript(-3, 4) == 13);
  CHECK(normalize_subscript(-3, 2) == 5);
  CHECK_THROWS_AS(normalize_subscript(3, 0), InvalidInputError);
}

TEST_CASE("block groups partition the out-of-block vertices") {
  const int p = 4;
  for (int r = 1; r <= p; ++r) {
    for (BlockGroup g : {BlockGroup::U1, BlockGroup::U2, BlockGroup::V1, BlockGroup::V2}) {
      auto members = block_group_members(g, r, p);
      CHECK(members.size() == 2 * static_cast<std::size_t>(p - 1));
      for (const VertexRef& v : members) {
        CHECK(block_group_contains(g, r, p, v));
        // never a block-r local
        CHECK((v.index < 4 * r - 3 || v.index > 4 * r));
      }
    }
    // the four groups are pairwise disjoint and cover everything outside r
    std::vector<VertexRef> all;
    for (BlockGroup g : {BlockGroup::U1, BlockGroup::U2, BlockGroup::V1, BlockGroup::V2}) {
      auto members = block_group_members(g, r, p);
      all.insert(all.end(), members.begin(), members.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == 8 * static_cast<std::size_t>(p - 1));
  }
}

TEST_CASE("base pages at p=1") {
  auto pages = base_pages(1);
  REQUIRE(pages.size() == 2);
  CHECK(pages[0].size() == 12);
  CHECK(pages[1].size() == 4);
  VerificationReport report = verify_decomposition({4, 4}, pages, 2);
  CHECK(report.overall);
}

TEST_CASE("base pages at p=2") {
  auto pages = base_pages(2);
  REQUIRE(pages.size() == 3);
  CHECK(pages[0].size() == 28);
  CHECK(pages[1].size() == 28);
  CHECK(pages[2].size() == 8);
  CHECK(verify_decomposition({8, 8}, pages, 3).overall);
}

TEST_CASE("p=1 pages pass the exhaustive oracle directly") {
  // every page of the p=1 decomposition fits the naive oracle's 12-vertex
  // guard; at p=2 the pages already have 16 vertices, so the cross-check
  // stops at p=1
  for (const Page& page : base_pages(1)) {
    auto [g, labels] = make_graph(std::span<const Edge>(page.edges()));
    CHECK(naive_is_planar(g));
    CHECK(is_planar(g));
  }
}

TEST_CASE("base pages partition and stay planar up to p=6") {
  for (int p = 1; p <= 6; ++p) {
    auto pages = base_pages(p);
    REQUIRE(pages.size() == static_cast<std::size_t>(p) + 1);
    for (int r = 0; r < p; ++r) {
      CHECK(pages[static_cast<std::size_t>(r)].size() ==
            static_cast<std::size_t>(16 * p - 4));
    }
    CHECK(pages.back().size() == static_cast<std::size_t>(4 * p));
    VerificationReport report =
        verify_decomposition({4 * p, 4 * p}, pages, p + 1);
    CAPTURE(p);
    CHECK(report.overall);
  }
}

TEST_CASE("faces of interest") {
  SUBCASE("face 5 is the inner quadrilateral") {
    for (int p : {1, 2, 4}) {
      for (int r = 1; r <= p; ++r) {
        auto faces = faces_of_interest(r, p);
        REQUIRE(faces.size() == 5);
        const FaceOfInterest& inner = faces[4];
        CHECK(inner.label == 5);
        CHECK_FALSE(inner.wildcard.has_value());
        const int b = 4 * r;
        std::vector<VertexRef> want = {VertexRef::u(b), VertexRef::v(b - 1),
                                       VertexRef::u(b - 3), VertexRef::v(b - 2)};
        std::sort(want.begin(), want.end());
        std::vector<VertexRef> got = inner.corners;
        std::sort(got.begin(), got.end());
        CHECK(got == want);
      }
    }
  }
  SUBCASE("face 1 of (r=1, p=2) touches v1, u4, u3") {
    auto faces = faces_of_interest(1, 2);
    const FaceOfInterest& face1 = faces[0];
    CHECK(face1.label == 1);
    for (const VertexRef& v : {VertexRef::v(1), VertexRef::u(4), VertexRef::u(3)}) {
      CHECK(std::find(face1.corners.begin(), face1.corners.end(), v) !=
            face1.corners.end());
    }
    CHECK(face1.wildcard == BlockGroup::V1);
  }
  SUBCASE("face 3 mirrors face 1 under the block's left-right symmetry") {
    // the symmetry swaps u_{4r-1} with u_{4r-2}, u_{4r} with u_{4r-3}, and
    // v_{4r-3} with v_{4r}
    const int r = 2, p = 3, b = 4 * r;
    auto faces = faces_of_interest(r, p);
    auto mirror = [b](VertexRef v) {
      if (v == VertexRef::u(b - 1)) return VertexRef::u(b - 2);
      if (v == VertexRef::u(b - 2)) return VertexRef::u(b - 1);
      if (v == VertexRef::u(b)) return VertexRef::u(b - 3);
      if (v == VertexRef::u(b - 3)) return VertexRef::u(b);
      if (v == VertexRef::v(b - 3)) return VertexRef::v(b);
      if (v == VertexRef::v(b)) return VertexRef::v(b - 3);
      return v;
    };
    std::vector<VertexRef> mirrored;
    for (const VertexRef& v : faces[0].corners) mirrored.push_back(mirror(v));
    std::sort(mirrored.begin(), mirrored.end());
    std::vector<VertexRef> face3 = faces[2].corners;
    std::sort(face3.begin(), face3.end());
    CHECK(mirrored == face3);
    CHECK(faces[2].wildcard == BlockGroup::V2);
  }
  SUBCASE("faces are genuine faces of an embedding of the page") {
    // every labelled face must be realizable: its corners plus one group
    // member bound a quadrilateral whose edges the page contains
    const int p = 3;
    auto pages = base_pages(p);
    for (int r = 1; r <= p; ++r) {
      const Page& page = pages[static_cast<std::size_t>(r - 1)];
      for (const FaceOfInterest& face : faces_of_interest(r, p)) {
        if (!face.wildcard.has_value()) continue;
        auto members = block_group_members(*face.wildcard, r, p);
        REQUIRE_FALSE(members.empty());
        // boundary: corners[0] - corners[1] - member - corners[2] - corners[0]
        const VertexRef w = members.front();
        CHECK(page.contains(Edge(face.corners[0], face.corners[1])));
        CHECK(page.contains(Edge(face.corners[1], w)));
        CHECK(page.contains(Edge(w, face.corners[2])));
        CHECK(page.contains(Edge(face.corners[2], face.corners[0])));
      }
    }
  }
}

TEST_CASE("base page count matches the bipartite formula") {
  for (int p = 1; p <= 8; ++p) {
    CHECK(static_cast<int>(base_pages(p).size()) ==
          thickness_formula(GraphFamily::knn(), 4 * p));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(base_pages(0), InvalidInputError);
  CHECK_THROWS_AS(block_group_members(BlockGroup::U1, 3, 2), InvalidInputError);
  CHECK_THROWS_AS(faces_of_interest(0, 2), InvalidInputError);
}
