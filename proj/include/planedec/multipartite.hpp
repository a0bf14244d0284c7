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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planedec/errors.hpp"

namespace planedec {

// Part tags in the order that defines the canonical form of an edge:
// x1 < x2 < u_i < v_j, ties broken by index.
enum class Part : std::uint8_t { X1 = 0, X2 = 1, U = 2, V = 3 };

/// A symbolic vertex of a complete multipartite graph ("x1", "u7", "v12").
struct VertexRef {
  Part part = Part::U;
  int index = 1;  // 1-based; always 1 for X1 and X2

  static VertexRef x1() { return {Part::X1, 1}; }
  static VertexRef x2() { return {Part::X2, 1}; }
  static VertexRef u(int i);
  static VertexRef v(int i);

  std::string label() const;
  static VertexRef parse(std::string_view label);

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Canonical undirected edge: endpoints stored with a < b.
struct Edge {
  VertexRef a;
  VertexRef b;

  Edge(VertexRef s, VertexRef t);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One planar subgraph of a decomposition, kept as a sorted duplicate-free
/// edge set. Duplicate insertion is an error by default; the constructions
/// that assemble a page from overlapping row listings opt in explicitly.
class Page {
 public:
  Page() = default;
  static Page from_edges(std::vector<Edge> edges);

  void add(Edge e);
  bool add_if_absent(Edge e);  // returns false if already present
  void remove(Edge e);
  bool contains(Edge e) const;

  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<VertexRef> vertices() const;

  friend bool operator==(const Page&, const Page&) = default;

 private:
  std::vector<Edge> edges_;  // sorted ascending
};

enum class FamilyTag { KNN, K1NN, K2NN, K11NN, Custom };

/// One of the named graph families (K_{n,n}, K_{1,n,n}, K_{2,n,n},
/// K_{1,1,n,n}) or a custom part-size list.
struct GraphFamily {
  FamilyTag tag = FamilyTag::Custom;
  std::vector<int> custom_sizes;  // used only when tag == Custom

  static GraphFamily knn() { return {FamilyTag::KNN, {}}; }
  static GraphFamily k1nn() { return {FamilyTag::K1NN, {}}; }
  static GraphFamily k2nn() { return {FamilyTag::K2NN, {}}; }
  static GraphFamily k11nn() { return {FamilyTag::K11NN, {}}; }
  static GraphFamily custom(std::vector<int> sizes);

  std::vector<int> part_sizes(int n) const;
  std::string name() const;
  static GraphFamily parse(std::string_view name);

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

/// An edge partition of a complete multipartite graph into planar pages,
/// together with how it was produced.
struct Decomposition {
  GraphFamily family;
  int n = 0;
  std::vector<int> part_sizes;
  std::vector<Page> pages;
  std::string provenance;
};

// Label model for a part-size list. Supported shapes:
//   [a, b]          -> U (a vertices), V (b vertices)
//   [1, a, b]       -> x1, U, V
//   [2, a, b]       -> x1 and x2 sharing the first part (no x1-x2 edge), U, V
//   [1, 1, a, b]    -> x1, x2 in singleton parts (x1-x2 edge exists), U, V
// Throws InvalidInputError for anything else.
void check_part_sizes(const std::vector<int>& part_sizes);

/// True iff `v` names a vertex of the graph described by `part_sizes`.
bool label_fits(const std::vector<int>& part_sizes, const VertexRef& v);

/// 0-based index of the part `v` belongs to under `part_sizes`.
int ambient_part(const std::vector<int>& part_sizes, const VertexRef& v);

/// All vertices of the graph described by `part_sizes`, in canonical order.
std::vector<VertexRef> all_vertices(const std::vector<int>& part_sizes);

/// Exactly the cross-part pairs in canonical form, sorted.
std::vector<Edge> complete_multipartite_edges(
    const std::vector<int>& part_sizes);

/// Number of cross-part pairs. Accepts any list of positive sizes.
long long edge_count(const std::vector<int>& part_sizes);

/// Published closed form for the thickness of a named family at size n.
int thickness_formula(const GraphFamily& family, int n);

/// max(1, ceil(e / (3v - 6))); returns 1 when v < 3.
int euler_lower_bound(long long v, long long e);

}  // namespace planedec
