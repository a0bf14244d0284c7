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

#include "planedec/io.hpp"

#include <sstream>

#include <json.hpp>

namespace planedec {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(std::string_view text, const char* what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(std::string(what) + ": not valid JSON");
  }
  return doc;
}

int require_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

std::string edge_location(std::size_t page, std::size_t index) {
  std::ostringstream os;
  os << "pages[" << page << "][" << index << "]";
  return os.str();
}

}  // namespace

std::string save_decomposition(const Decomposition& d) {
  // hand-rolled emitter: fixed key order, one edge per line, no floats
  std::ostringstream os;
  auto quoted = [](const std::string& s) { return ordered_json(s).dump(); };
  os << "{\n";
  os << "  \"schema\": " << quoted(std::string(kDecompositionSchema)) << ",\n";
  os << "  \"family\": " << quoted(d.family.name()) << ",\n";
  os << "  \"n\": " << d.n << ",\n";
  os << "  \"part_sizes\": [";
  for (std::size_t i = 0; i < d.part_sizes.size(); ++i) {
    os << (i ? ", " : "") << d.part_sizes[i];
  }
  os << "],\n";
  os << "  \"pages\": [\n";
  for (std::size_t p = 0; p < d.pages.size(); ++p) {
    os << "    [\n";
    const auto& edges = d.pages[p].edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      os << "      [" << quoted(edges[i].a.label()) << ", "
         << quoted(edges[i].b.label()) << "]" << (i + 1 < edges.size() ? "," : "")
         << "\n";
    }
    os << "    ]" << (p + 1 < d.pages.size() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"provenance\": " << quoted(d.provenance) << "\n";
  os << "}\n";
  return os.str();
}

Decomposition load_decomposition(std::string_view text) {
  ordered_json doc = parse_json(text, "decomposition document");
  if (!doc.is_object()) throw ParseError("document root must be an object");
  for (const char* key : {"schema", "family", "n", "part_sizes", "pages", "provenance"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  }
  if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kDecompositionSchema) {
    throw ParseError("schema: expected '" + std::string(kDecompositionSchema) + "'");
  }
  if (!doc["family"].is_string()) throw ParseError("family: expected a string");
  const std::string family_name = doc["family"].get<std::string>();

  Decomposition d;
  d.n = require_int(doc["n"], "n");
  if (!doc["part_sizes"].is_array()) throw ParseError("part_sizes: expected an array");
  for (std::size_t i = 0; i < doc["part_sizes"].size(); ++i) {
    d.part_sizes.push_back(require_int(doc["part_sizes"][i], "part_sizes[" + std::to_string(i) + "]"));
  }
  try {
    if (family_name == "custom") {
      d.family = GraphFamily::custom(d.part_sizes);
    } else {
      d.family = GraphFamily::parse(family_name);
      if (d.family.part_sizes(d.n) != d.part_sizes) {
        throw ParseError("part_sizes do not match family '" + family_name +
                         "' at n=" + std::to_string(d.n));
      }
    }
    check_part_sizes(d.part_sizes);
  } catch (const InvalidInputError& err) {
    throw ParseError(std::string("invalid header: ") + err.what());
  }

  if (!doc["pages"].is_array()) throw ParseError("pages: expected an array");
  for (std::size_t pi = 0; pi < doc["pages"].size(); ++pi) {
    const ordered_json& jpage = doc["pages"][pi];
    if (!jpage.is_array()) {
      throw ParseError("pages[" + std::to_string(pi) + "]: expected an array");
    }
    if (jpage.empty()) {
      throw ParseError("pages[" + std::to_string(pi) + "]: page is empty");
    }
    Page page;
    for (std::size_t ei = 0; ei < jpage.size(); ++ei) {
      const ordered_json& jedge = jpage[ei];
      const std::string where = edge_location(pi, ei);
      if (!jedge.is_array() || jedge.size() != 2 || !jedge[0].is_string() ||
          !jedge[1].is_string()) {
        throw ParseError(where + ": expected a pair of labels");
      }
      VertexRef a, b;
      try {
        a = VertexRef::parse(jedge[0].get<std::string>());
        b = VertexRef::parse(jedge[1].get<std::string>());
      } catch (const InvalidInputError& err) {
        throw ParseError(where + ": " + err.what());
      }
      if (!label_fits(d.part_sizes, a) || !label_fits(d.part_sizes, b)) {
        throw ParseError(where + ": label outside the declared graph");
      }
      if (a == b) throw ParseError(where + ": self-loop");
      if (!(a < b)) throw ParseError(where + ": endpoints not in canonical order");
      if (ambient_part(d.part_sizes, a) == ambient_part(d.part_sizes, b)) {
        throw ParseError(where + ": endpoints share a part");
      }
      try {
        page.add(Edge(a, b));
      } catch (const InvalidInputError&) {
        throw ParseError(where + ": duplicate edge within the page");
      }
    }
    d.pages.push_back(std::move(page));
  }
  if (!doc["provenance"].is_string()) throw ParseError("provenance: expected a string");
  d.provenance = doc["provenance"].get<std::string>();
  return d;
}

namespace {

ordered_json edges_to_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) {
    arr.push_back(ordered_json::array({e.a.label(), e.b.label()}));
  }
  return arr;
}

std::vector<Edge> edges_from_json(const ordered_json& arr, const char* key) {
  if (!arr.is_array()) throw ParseError(std::string(key) + ": expected an array");
  std::vector<Edge> out;
  for (const auto& jedge : arr) {
    if (!jedge.is_array() || jedge.size() != 2) {
      throw ParseError(std::string(key) + ": expected label pairs");
    }
    out.emplace_back(VertexRef::parse(jedge[0].get<std::string>()),
                     VertexRef::parse(jedge[1].get<std::string>()));
  }
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["schema"] = "verification-report/v1";
  doc["is_partition"] = report.is_partition;
  doc["duplicate_edges"] = edges_to_json(report.duplicate_edges);
  doc["missing_edges"] = edges_to_json(report.missing_edges);
  doc["foreign_edges"] = edges_to_json(report.foreign_edges);
  doc["pages_planar"] = report.pages_planar;
  doc["page_count"] = report.page_count;
  if (report.expected_count.has_value()) {
    doc["expected_count"] = *report.expected_count;
  } else {
    doc["expected_count"] = nullptr;
  }
  if (report.count_matches.has_value()) {
    doc["count_matches"] = *report.count_matches;
  } else {
    doc["count_matches"] = nullptr;
  }
  doc["overall"] = report.overall;
  return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  ordered_json doc = parse_json(text, "verification report");
  if (!doc.is_object() || !doc.contains("schema") ||
      doc["schema"] != "verification-report/v1") {
    throw ParseError("expected a verification-report/v1 document");
  }
  VerificationReport report;
  report.is_partition = doc.at("is_partition").get<bool>();
  report.duplicate_edges = edges_from_json(doc.at("duplicate_edges"), "duplicate_edges");
  report.missing_edges = edges_from_json(doc.at("missing_edges"), "missing_edges");
  report.foreign_edges = edges_from_json(doc.at("foreign_edges"), "foreign_edges");
  report.pages_planar = doc.at("pages_planar").get<std::vector<bool>>();
  report.page_count = doc.at("page_count").get<int>();
  if (!doc.at("expected_count").is_null()) {
    report.expected_count = doc.at("expected_count").get<int>();
  }
  if (!doc.at("count_matches").is_null()) {
    report.count_matches = doc.at("count_matches").get<bool>();
  }
  report.overall = doc.at("overall").get<bool>();
  return report;
}

GraphDocument load_graph(std::string_view text) {
  ordered_json doc = parse_json(text, "graph document");
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kGraphSchema) {
    throw ParseError("expected a graph/v1 document");
  }
  if (doc.contains("complete_multipartite")) {
    std::vector<int> sizes;
    for (const auto& js : doc["complete_multipartite"]) {
      sizes.push_back(require_int(js, "complete_multipartite"));
    }
    std::vector<Edge> edges;
    try {
      edges = complete_multipartite_edges(sizes);
    } catch (const InvalidInputError& err) {
      throw ParseError(std::string("complete_multipartite: ") + err.what());
    }
    auto [graph, labels] = make_graph(std::span<const Edge>(edges));
    return GraphDocument{std::move(graph), std::move(sizes)};
  }
  if (!doc.contains("vertex_count") || !doc.contains("edges")) {
    throw ParseError("graph document needs complete_multipartite or vertex_count+edges");
  }
  int n = require_int(doc["vertex_count"], "vertex_count");
  if (n < 0) throw ParseError("vertex_count: negative");
  SimpleGraph g(n);
  if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& je = doc["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!je.is_array() || je.size() != 2) throw ParseError(where + ": expected [a, b]");
    int a = require_int(je[0], where);
    int b = require_int(je[1], where);
    try {
      g.add_edge(a, b);
    } catch (const InvalidInputError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return GraphDocument{std::move(g), {}};
}

namespace {

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#7d3c98",
                          "#b7950b", "#17a589", "#a04000", "#5d6d7e"};

}  // namespace

std::vector<DotFile> export_dot(const Decomposition& d, DotMode mode) {
  std::vector<DotFile> files;
  if (mode == DotMode::PerPage) {
    for (std::size_t i = 0; i < d.pages.size(); ++i) {
      std::ostringstream os;
      os << "graph page_" << (i + 1) << " {\n";
      for (const Edge& e : d.pages[i].edges()) {
        os << "  \"" << e.a.label() << "\" -- \"" << e.b.label() << "\";\n";
      }
      os << "}\n";
      std::ostringstream name;
      name << "page_" << (i + 1) << ".dot";
      files.push_back({name.str(), os.str()});
    }
    return files;
  }
  std::ostringstream os;
  os << "graph " << d.family.name() << "_n" << d.n << " {\n";
  for (std::size_t i = 0; i < d.pages.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    for (const Edge& e : d.pages[i].edges()) {
      os << "  \"" << e.a.label() << "\" -- \"" << e.b.label() << "\" [page=" << (i + 1)
         << ", color=\"" << color << "\"];\n";
    }
  }
  os << "}\n";
  files.push_back({"decomposition.dot", os.str()});
  return files;
}

}  // namespace planedec
