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
#include <optional>
#include <vector>

#include "planedec/multipartite.hpp"

namespace planedec {

// Decomposition generators for the named families. Each family is built at
// an "anchor" size m (m = 2 mod 4 for K_{1,n,n}; m = 1 mod 4 for K_{2,n,n}
// and K_{1,1,n,n}) where a direct construction exists, and other sizes are
// reached by deleting trailing u/v vertices. Every generator re-verifies
// its output and aborts loudly instead of repairing it.

enum class AnchorCase { EvenGeneric, OddGeneric, Small };

/// EvenGeneric for even p >= 4, OddGeneric for odd p >= 5, Small for p <= 3.
AnchorCase anchor_case_for(int p);

/// Smallest anchor size m >= n for the family; asserts that the thickness
/// formula takes the same value at m and at n.
int anchor_n(const GraphFamily& family, int n);

/// Planar decomposition of K_{1,4p+2,4p+2} into p+1 pages.
Decomposition k1nn_anchor(int p);

/// Page r of the K_{1,4p+2,4p+2} construction: base page r minus the two
/// freed cycle edges, plus the tabulated apex edges. Exposed for tests.
Page k1nn_block_page(int r, int p, AnchorCase c);

/// Final page of the K_{1,4p+2,4p+2} construction: apex stars over the
/// leftover residue classes, the freed edges, and the full matching.
Page k1nn_final_page(int p, AnchorCase c);

/// Curated decompositions of K_{1,2,2}, K_{1,6,6}, K_{1,10,10}, K_{1,14,14}.
Decomposition k1nn_small_case(int p);

/// Planar decomposition of K_{2,4p+1,4p+1} into p+1 pages.
Decomposition k2nn_anchor(int p);
Page k2nn_block_page(int r, int p, AnchorCase c);
Page k2nn_final_page(int p, AnchorCase c);

/// Curated decompositions of K_{2,1,1}, K_{2,5,5}, K_{2,9,9}, K_{2,13,13}.
Decomposition k2nn_small_case(int p);

/// K_{apex_count,4p,4p} in p+1 pages: the base pages untouched, plus a
/// final page where one or two apexes join every vertex of the matching.
Decomposition apex_matching_pages(int p, int apex_count);

/// Adds the x1-x2 edge to the last page, turning a valid K_{2,m,m}
/// decomposition into a K_{1,1,m,m} one. The last page must stay planar;
/// if it does not, this throws instead of repairing.
Decomposition add_x1x2_edge(const Decomposition& d);

/// Removes u_j, v_j for j > n_target from every page and drops pages that
/// become empty. The page count never increases.
Decomposition delete_to_n(const Decomposition& d, int n_target);

/// Verified decomposition with exactly thickness_formula(family, n) pages.
/// KNN supports only n = 0 (mod 4).
Decomposition generate(const GraphFamily& family, int n);

/// Randomized planarity-guided local search that re-discovers a planar
/// decomposition with `page_count` pages from scratch. Fallback tooling for
/// when a curated data set is ever found defective; generator outputs never
/// come from here.
std::optional<std::vector<Page>> rediscover_pages(
    const std::vector<int>& part_sizes, int page_count, std::uint64_t seed,
    long long max_steps = 2'000'000);

}  // namespace planedec
