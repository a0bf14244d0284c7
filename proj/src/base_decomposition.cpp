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

namespace planedec {

namespace {

void check_block(int r, int p) {
  if (p < 1) throw InvalidInputError("p must be >= 1");
  if (r < 1 || r > p) throw InvalidInputError("block index r out of range");
}

}  // namespace

std::vector<VertexRef> block_group_members(BlockGroup group, int r, int p) {
  check_block(r, p);
  std::vector<VertexRef> out;
  out.reserve(2 * static_cast<std::size_t>(p - 1));
  for (int i = 1; i <= p; ++i) {
    if (i == r) continue;
    switch (group) {
      case BlockGroup::U1:
        out.push_back(VertexRef::u(4 * i - 3));
        out.push_back(VertexRef::u(4 * i - 2));
        break;
      case BlockGroup::U2:
        out.push_back(VertexRef::u(4 * i - 1));
        out.push_back(VertexRef::u(4 * i));
        break;
      case BlockGroup::V1:
        out.push_back(VertexRef::v(4 * i - 3));
        out.push_back(VertexRef::v(4 * i - 1));
        break;
      case BlockGroup::V2:
        out.push_back(VertexRef::v(4 * i - 2));
        out.push_back(VertexRef::v(4 * i));
        break;
    }
  }
  return out;
}

bool block_group_contains(BlockGroup group, int r, int p, const VertexRef& v) {
  check_block(r, p);
  if (v.index < 1 || v.index > 4 * p) return false;
  int i = (v.index + 3) / 4;  // block of the subscript
  if (i == r) return false;
  int residue = v.index - 4 * (i - 1);  // 1..4
  switch (group) {
    case BlockGroup::U1: return v.part == Part::U && (residue == 1 || residue == 2);
    case BlockGroup::U2: return v.part == Part::U && (residue == 3 || residue == 4);
    case BlockGroup::V1: return v.part == Part::V && (residue == 1 || residue == 3);
    case BlockGroup::V2: return v.part == Part::V && (residue == 2 || residue == 4);
  }
  return false;
}

int normalize_subscript(int j, int p) {
  if (p < 1) throw InvalidInputError("p must be >= 1");
  int m = 4 * p;
  int r = ((j - 1) % m + m) % m + 1;
  return r;
}

std::vector<Page> base_pages(int p) {
  if (p < 1) throw InvalidInputError("p must be >= 1");
  const auto u = [](int i) { return VertexRef::u(i); };
  const auto v = [](int i) { return VertexRef::v(i); };

  std::vector<Page> pages;
  pages.reserve(static_cast<std::size_t>(p) + 1);
  for (int r = 1; r <= p; ++r) {
    Page page;
    const int b = 4 * r;
    // outer 4-cycle
    page.add(Edge(v(b - 3), u(b - 1)));
    page.add(Edge(u(b - 1), v(b)));
    page.add(Edge(v(b), u(b - 2)));
    page.add(Edge(u(b - 2), v(b - 3)));
    // inner 4-cycle
    page.add(Edge(v(b - 1), u(b)));
    page.add(Edge(u(b), v(b - 2)));
    page.add(Edge(v(b - 2), u(b - 3)));
    page.add(Edge(u(b - 3), v(b - 1)));
    // chords
    page.add(Edge(v(b - 3), u(b)));
    page.add(Edge(u(b - 1), v(b - 2)));
    page.add(Edge(v(b), u(b - 3)));
    page.add(Edge(u(b - 2), v(b - 1)));
    // path bundles through the out-of-block groups
    for (const VertexRef& w : block_group_members(BlockGroup::U1, r, p)) {
      page.add(Edge(w, v(b - 3)));
      page.add(Edge(w, v(b - 1)));
    }
    for (const VertexRef& w : block_group_members(BlockGroup::U2, r, p)) {
      page.add(Edge(w, v(b - 2)));
      page.add(Edge(w, v(b)));
    }
    for (const VertexRef& w : block_group_members(BlockGroup::V1, r, p)) {
      page.add(Edge(w, u(b - 1)));
      page.add(Edge(w, u(b)));
    }
    for (const VertexRef& w : block_group_members(BlockGroup::V2, r, p)) {
      page.add(Edge(w, u(b - 2)));
      page.add(Edge(w, u(b - 3)));
    }
    pages.push_back(std::move(page));
  }

  Page matching;
  for (int j = 1; j <= 4 * p; ++j) matching.add(Edge(u(j), v(j)));
  pages.push_back(std::move(matching));
  return pages;
}

std::vector<FaceOfInterest> faces_of_interest(int r, int p) {
  check_block(r, p);
  const auto u = [](int i) { return VertexRef::u(i); };
  const auto v = [](int i) { return VertexRef::v(i); };
  const int b = 4 * r;
  std::vector<FaceOfInterest> faces;
  faces.push_back({1, {v(b - 3), u(b), u(b - 1)}, BlockGroup::V1});
  faces.push_back({2, {u(b - 1), v(b - 2), v(b)}, BlockGroup::U2});
  faces.push_back({3, {v(b), u(b - 3), u(b - 2)}, BlockGroup::V2});
  faces.push_back({4, {u(b - 2), v(b - 1), v(b - 3)}, BlockGroup::U1});
  faces.push_back({5, {u(b), v(b - 1), u(b - 3), v(b - 2)}, std::nullopt});
  return faces;
}

}  // namespace planedec
