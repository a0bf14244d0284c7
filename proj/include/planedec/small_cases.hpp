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

#include <string_view>

#include "planedec/multipartite.hpp"

namespace planedec {

// The six curated small decompositions (K_{1,6,6}, K_{1,10,10}, K_{1,14,14}
// and K_{2,5,5}, K_{2,9,9}, K_{2,13,13}) ship as versioned JSON documents
// under data/, embedded into the library at build time. Loading recomputes
// each document's SHA-256 against a pinned constant and re-verifies the
// decomposition; any mismatch is a hard error, never a silent regeneration.

/// family must be K1NN or K2NN; p in 1..3.
Decomposition curated_small_case(FamilyTag family, int p);

/// Raw document bytes as shipped (post checksum gate). Exposed so tools and
/// tests can round-trip the exact curated files.
std::string_view curated_small_case_document(FamilyTag family, int p);

}  // namespace planedec
