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
#include <vector>

#include "planedec/multipartite.hpp"

namespace planedec {

// The base planar decomposition of K_{4p,4p} into p+1 pages. Page r
// (1 <= r <= p) is built around block r = {u,v}_{4r-3..4r}: an outer
// 4-cycle, an inner 4-cycle, four chords, and bundles of length-2 paths
// that attach every out-of-block vertex twice. Page p+1 is the perfect
// matching u_j v_j.

/// The four out-of-block vertex groups that page r's path bundles draw on.
enum class BlockGroup { U1, U2, V1, V2 };

/// Members of one group for block r: U1 = {u_{4i-3}, u_{4i-2} : i != r},
/// U2 = {u_{4i-1}, u_{4i} : i != r}, V1 = {v_{4i-3}, v_{4i-1} : i != r},
/// V2 = {v_{4i-2}, v_{4i} : i != r}.
std::vector<VertexRef> block_group_members(BlockGroup group, int r, int p);

bool block_group_contains(BlockGroup group, int r, int p, const VertexRef& v);

/// Representative of j modulo 4p in {1, ..., 4p}. Callers keep the two
/// appended indices 4p+1 and 4p+2 away from this function.
int normalize_subscript(int j, int p);

/// The p+1 pages partitioning K_{4p,4p}; page sizes are 16p-4 and 4p.
std::vector<Page> base_pages(int p);

/// One of the five labelled quadrilateral faces of page r used by the
/// apex constructions: faces 1-4 sit between the outer and inner cycles
/// (the fourth corner is any vertex of the named group), face 5 is the
/// inner quadrilateral. Documentation-level data only.
struct FaceOfInterest {
  int label = 0;
  std::vector<VertexRef> corners;
  std::optional<BlockGroup> wildcard;
};

std::vector<FaceOfInterest> faces_of_interest(int r, int p);

}  // namespace planedec
