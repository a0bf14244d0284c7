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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace planedec {

// The acceptance sweep behind `planedec selftest`. Criterion 4 is the
// documented divergence at K_{2,2,2} (the formula says 2, the octahedron is
// planar): it reports as passed-with-flag, not as a failure.

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool flagged = false;  // expected divergence surfaced (still a pass)
  std::string detail;
};

struct SelftestOptions {
  int n_max = 48;             // formula sweep / determinism cap
  int base_p_max = 10;        // base decomposition sweep cap
  int random_graphs = 5000;   // planarity cross-validation sample size
  std::uint64_t random_seed = 0x9e3779b97f4a7c15ULL;
  long long oracle_budget = 10'000'000;
};

/// Runs all acceptance criteria; prints one line per criterion to `out`
/// as it goes. Returns the detailed results.
std::vector<CriterionResult> run_selftest(const SelftestOptions& options,
                                          std::ostream& out);

/// True iff every criterion passed (flagged divergences count as passes).
bool selftest_ok(const std::vector<CriterionResult>& results);

}  // namespace planedec
