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

#include <optional>
#include <span>
#include <vector>

#include "planedec/multipartite.hpp"

namespace planedec {

/// Undirected simple graph over dense 0-based vertex ids.
class SimpleGraph {
 public:
  explicit SimpleGraph(int vertex_count);

  void add_edge(int u, int v);  // rejects loops, duplicates, out-of-range ids
  bool has_edge(int u, int v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

 private:
  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

/// Combinatorial embedding: for every vertex the clockwise cyclic order of
/// its neighbors. Certificate form for planarity.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

/// Builds a SimpleGraph from labelled edges; dense relabelling is internal.
/// The i-th returned vertex corresponds to graph id i.
std::pair<SimpleGraph, std::vector<VertexRef>> make_graph(
    std::span<const Edge> edges);

/// Linear-time left-right planarity criterion. Handles disconnected input.
bool is_planar(const SimpleGraph& g);
bool is_planar(std::span<const Edge> edges);
bool is_planar(const Page& page);

/// Rotation system on planar input, std::nullopt on non-planar input.
std::optional<RotationSystem> planar_embedding(const SimpleGraph& g);

/// True iff tracing the faces of `rot` satisfies Euler's relation on every
/// component (V - E + F = 2 per connected component). Throws
/// InvalidInputError when `rot` does not cover exactly the edges of `g`.
bool validate_embedding(const SimpleGraph& g, const RotationSystem& rot);

/// Number of face orbits traced per component, summed. For a connected
/// graph with at least one edge this is the face count of the embedding.
int face_count(const SimpleGraph& g, const RotationSystem& rot);

/// Ground-truth planarity for tiny graphs: exhaustive search for a K_5 or
/// K_{3,3} minor (contraction recursion with memoisation over quotient
/// graphs, deletions absorbed by the subgraph base check). Guarded to
/// |V| <= 12; throws InvalidInputError above that.
bool naive_is_planar(const SimpleGraph& g);

}  // namespace planedec
