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

// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line per criterion. Exit status 0 iff everything passed
// (the flagged K_{2,2,2} divergence counts as a pass).

#include <iostream>

#include "planedec/selftest.hpp"

int main() {
  planedec::SelftestOptions options;  // full defaults: n <= 48, 5000 graphs
  auto results = planedec::run_selftest(options, std::cout);
  bool ok = planedec::selftest_ok(results);
  std::cout << (ok ? "acceptance: all criteria passed"
                   : "acceptance: FAILURES present")
            << "\n";
  return ok ? 0 : 1;
}
