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

/// Structured result of the partition / planarity / count checks.
/// Offending edges are reported exhaustively, not first-failure.
struct VerificationReport {
  bool is_partition = false;
  std::vector<Edge> duplicate_edges;
  std::vector<Edge> missing_edges;
  std::vector<Edge> foreign_edges;
  std::vector<bool> pages_planar;
  int page_count = 0;
  std::optional<int> expected_count;
  std::optional<bool> count_matches;
  bool overall = false;

  bool all_pages_planar() const;
};

/// The single authority that declares a page list a valid planar
/// decomposition of the complete multipartite graph given by `part_sizes`.
/// The target edge set is recomputed from `part_sizes` alone; no
/// construction code is consulted. Pages over at most 12 vertices have
/// their planarity verdicts cross-checked against the naive oracle.
/// Malformed labels throw InvalidInputError rather than failing the report.
VerificationReport verify_decomposition(
    const std::vector<int>& part_sizes, const std::vector<Page>& pages,
    std::optional<int> expected_count = std::nullopt);

VerificationReport verify_decomposition(
    const Decomposition& d, std::optional<int> expected_count = std::nullopt);

}  // namespace planedec
