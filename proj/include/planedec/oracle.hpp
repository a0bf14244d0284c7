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

#include <utility>
#include <vector>

#include "planedec/planarity.hpp"

namespace planedec {

inline constexpr long long kDefaultOracleBudget = 10'000'000;

/// Outcome of the exact-thickness search.
struct OracleResult {
  enum class Kind {
    Exact,           // k is the thickness; witness holds a valid partition
    LowerBoundOnly,  // every k' < k was refuted, no witness within k_max
    BudgetExhausted  // ran out of assignment budget before an answer
  };
  Kind kind = Kind::BudgetExhausted;
  int k = 0;
  long long nodes_explored = 0;
  std::vector<std::vector<std::pair<int, int>>> witness;  // pages of edges
};

/// Ground-truth thickness by iterative-deepening depth-first edge
/// assignment: edges are placed in a fixed order (descending endpoint
/// degree sum), a page is abandoned as soon as its partial subgraph fails
/// the planarity test, and symmetry is broken by capping each edge's page
/// index at one past the highest page in use. Every returned witness is
/// re-checked (partition of E, all pages planar) before it leaves.
/// Practical up to roughly 40 edges.
OracleResult exact_thickness(const SimpleGraph& g, int k_max = 6,
                             long long node_budget = kDefaultOracleBudget);

/// max(1, ceil(E/(3V-6))), sharpened to ceil(E/(2V-4)) on triangle-free
/// graphs. Never exceeds the exact thickness.
int thickness_lower_bound(const SimpleGraph& g);

}  // namespace planedec
