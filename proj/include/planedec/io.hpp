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

#include <string>
#include <string_view>
#include <vector>

#include "planedec/multipartite.hpp"
#include "planedec/planarity.hpp"
#include "planedec/verify.hpp"

namespace planedec {

// Document schema "thickness-decomposition/v1": fixed key order
// (schema, family, n, part_sizes, pages, provenance), labels x1|x2|u<k>|v<k>,
// every edge a canonically ordered label pair, integers only. Serialization
// is deterministic byte for byte.

inline constexpr std::string_view kDecompositionSchema =
    "thickness-decomposition/v1";

/// Canonical serialization; save(load(doc)) == doc for canonical documents.
std::string save_decomposition(const Decomposition& d);

/// Parses and validates a document. Structural offenses (unknown schema,
/// malformed labels, out-of-range indices, non-canonical or duplicate edges
/// within a page) throw ParseError naming the location. Cross-page
/// duplicates are left to the verifier.
Decomposition load_decomposition(std::string_view text);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view text);

// Graph documents (schema "graph/v1") feed the exact-thickness oracle:
// either {"complete_multipartite": [sizes...]} or an explicit
// {"vertex_count": V, "edges": [[a,b], ...]} with 0-based indices.
struct GraphDocument {
  SimpleGraph graph;
  std::vector<int> part_sizes;  // empty for explicit edge lists
};

inline constexpr std::string_view kGraphSchema = "graph/v1";

GraphDocument load_graph(std::string_view text);

enum class DotMode { PerPage, ColoredUnion };

struct DotFile {
  std::string filename;
  std::string content;
};

/// Deterministic DOT rendering: one file per page, or a single file with a
/// page attribute (and a cycling color) per edge.
std::vector<DotFile> export_dot(const Decomposition& d, DotMode mode);

}  // namespace planedec
