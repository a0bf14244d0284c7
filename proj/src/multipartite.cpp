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

#include "planedec/multipartite.hpp"

#include <algorithm>
#include <charconv>

namespace planedec {

namespace {

int parse_positive_index(std::string_view digits, std::string_view label) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) {
    throw InvalidInputError("malformed vertex label: '" + std::string(label) + "'");
  }
  // reject leading zeros so labels have one spelling
  if (digits.size() > 1 && digits.front() == '0') {
    throw InvalidInputError("malformed vertex label: '" + std::string(label) + "'");
  }
  return value;
}

}  // namespace

VertexRef VertexRef::u(int i) {
  if (i < 1) throw InvalidInputError("u-index must be >= 1");
  return {Part::U, i};
}

VertexRef VertexRef::v(int i) {
  if (i < 1) throw InvalidInputError("v-index must be >= 1");
  return {Part::V, i};
}

std::string VertexRef::label() const {
  switch (part) {
    case Part::X1: return "x1";
    case Part::X2: return "x2";
    case Part::U: return "u" + std::to_string(index);
    case Part::V: return "v" + std::to_string(index);
  }
  throw InvalidInputError("corrupt vertex ref");
}

VertexRef VertexRef::parse(std::string_view label) {
  if (label == "x1") return x1();
  if (label == "x2") return x2();
  if (label.size() >= 2 && (label[0] == 'u' || label[0] == 'v')) {
    int idx = parse_positive_index(label.substr(1), label);
    return {label[0] == 'u' ? Part::U : Part::V, idx};
  }
  throw InvalidInputError("malformed vertex label: '" + std::string(label) + "'");
}

Edge::Edge(VertexRef s, VertexRef t) {
  if (s == t) throw InvalidInputError("self-loop edge at " + s.label());
  if (t < s) std::swap(s, t);
  a = s;
  b = t;
}

Page Page::from_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InvalidInputError("duplicate edge " + dup->a.label() + "-" + dup->b.label());
  }
  Page p;
  p.edges_ = std::move(edges);
  return p;
}

void Page::add(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    throw InvalidInputError("duplicate edge " + e.a.label() + "-" + e.b.label());
  }
  edges_.insert(it, e);
}

bool Page::add_if_absent(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

void Page::remove(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) {
    throw InvalidInputError("cannot remove absent edge " + e.a.label() + "-" + e.b.label());
  }
  edges_.erase(it);
}

bool Page::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<VertexRef> Page::vertices() const {
  std::vector<VertexRef> vs;
  vs.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

GraphFamily GraphFamily::custom(std::vector<int> sizes) {
  check_part_sizes(sizes);
  return {FamilyTag::Custom, std::move(sizes)};
}

std::vector<int> GraphFamily::part_sizes(int n) const {
  if (tag != FamilyTag::Custom && n < 1) {
    throw InvalidInputError("family size n must be >= 1");
  }
  switch (tag) {
    case FamilyTag::KNN: return {n, n};
    case FamilyTag::K1NN: return {1, n, n};
    case FamilyTag::K2NN: return {2, n, n};
    case FamilyTag::K11NN: return {1, 1, n, n};
    case FamilyTag::Custom: return custom_sizes;
  }
  throw InvalidInputError("corrupt family tag");
}

std::string GraphFamily::name() const {
  switch (tag) {
    case FamilyTag::KNN: return "knn";
    case FamilyTag::K1NN: return "k1nn";
    case FamilyTag::K2NN: return "k2nn";
    case FamilyTag::K11NN: return "k11nn";
    case FamilyTag::Custom: return "custom";
  }
  throw InvalidInputError("corrupt family tag");
}

GraphFamily GraphFamily::parse(std::string_view name) {
  if (name == "knn") return knn();
  if (name == "k1nn") return k1nn();
  if (name == "k2nn") return k2nn();
  if (name == "k11nn") return k11nn();
  throw InvalidInputError("unknown family '" + std::string(name) + "'");
}

void check_part_sizes(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw InvalidInputError("part size list is empty");
  for (int s : part_sizes) {
    if (s < 1) throw InvalidInputError("part sizes must be positive");
  }
  switch (part_sizes.size()) {
    case 2:
      return;
    case 3:
      if (part_sizes[0] > 2) {
        throw InvalidInputError("3-part graphs support at most 2 apex vertices");
      }
      return;
    case 4:
      if (part_sizes[0] != 1 || part_sizes[1] != 1) {
        throw InvalidInputError("4-part graphs must have two singleton apex parts");
      }
      return;
    default:
      throw InvalidInputError("unsupported number of parts: " +
                              std::to_string(part_sizes.size()));
  }
}

namespace {

// Sizes of the x1/x2/U/V slots for a checked part-size list, with the
// 0-based ambient part index of each slot. A slot size of 0 means the
// label does not exist in this graph.
struct LabelModel {
  int x1_part = -1;
  int x2_part = -1;
  int u_part = -1;
  int v_part = -1;
  int u_size = 0;
  int v_size = 0;
};

LabelModel label_model(const std::vector<int>& part_sizes) {
  check_part_sizes(part_sizes);
  LabelModel m;
  switch (part_sizes.size()) {
    case 2:
      m.u_part = 0;
      m.v_part = 1;
      m.u_size = part_sizes[0];
      m.v_size = part_sizes[1];
      break;
    case 3:
      m.x1_part = 0;
      if (part_sizes[0] == 2) m.x2_part = 0;
      m.u_part = 1;
      m.v_part = 2;
      m.u_size = part_sizes[1];
      m.v_size = part_sizes[2];
      break;
    case 4:
      m.x1_part = 0;
      m.x2_part = 1;
      m.u_part = 2;
      m.v_part = 3;
      m.u_size = part_sizes[2];
      m.v_size = part_sizes[3];
      break;
  }
  return m;
}

}  // namespace

bool label_fits(const std::vector<int>& part_sizes, const VertexRef& v) {
  LabelModel m = label_model(part_sizes);
  switch (v.part) {
    case Part::X1: return m.x1_part >= 0 && v.index == 1;
    case Part::X2: return m.x2_part >= 0 && v.index == 1;
    case Part::U: return v.index >= 1 && v.index <= m.u_size;
    case Part::V: return v.index >= 1 && v.index <= m.v_size;
  }
  return false;
}

int ambient_part(const std::vector<int>& part_sizes, const VertexRef& v) {
  if (!label_fits(part_sizes, v)) {
    throw InvalidInputError("vertex " + v.label() + " does not exist in this graph");
  }
  LabelModel m = label_model(part_sizes);
  switch (v.part) {
    case Part::X1: return m.x1_part;
    case Part::X2: return m.x2_part;
    case Part::U: return m.u_part;
    case Part::V: return m.v_part;
  }
  throw InvalidInputError("corrupt vertex ref");
}

std::vector<VertexRef> all_vertices(const std::vector<int>& part_sizes) {
  LabelModel m = label_model(part_sizes);
  std::vector<VertexRef> vs;
  if (m.x1_part >= 0) vs.push_back(VertexRef::x1());
  if (m.x2_part >= 0) vs.push_back(VertexRef::x2());
  for (int i = 1; i <= m.u_size; ++i) vs.push_back(VertexRef::u(i));
  for (int i = 1; i <= m.v_size; ++i) vs.push_back(VertexRef::v(i));
  return vs;
}

std::vector<Edge> complete_multipartite_edges(
    const std::vector<int>& part_sizes) {
  std::vector<VertexRef> vs = all_vertices(part_sizes);
  if (vs.size() < 2) {
    throw InvalidInputError("need at least two vertices");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int pi = ambient_part(part_sizes, vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (ambient_part(part_sizes, vs[j]) != pi) {
        edges.emplace_back(vs[i], vs[j]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

long long edge_count(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw InvalidInputError("part size list is empty");
  long long total = 0;
  long long cross = 0;
  for (int s : part_sizes) {
    if (s < 1) throw InvalidInputError("part sizes must be positive");
    cross += total * s;
    total += s;
  }
  return cross;
}

int thickness_formula(const GraphFamily& family, int n) {
  if (n < 1) throw InvalidInputError("thickness formula requires n >= 1");
  switch (family.tag) {
    case FamilyTag::KNN:
    case FamilyTag::K1NN:
      return (n + 2 + 3) / 4;  // ceil((n+2)/4)
    case FamilyTag::K2NN:
    case FamilyTag::K11NN:
      return (n + 3 + 3) / 4;  // ceil((n+3)/4)
    case FamilyTag::Custom:
      throw InvalidInputError("no closed-form thickness for custom part sizes");
  }
  throw InvalidInputError("corrupt family tag");
}

int euler_lower_bound(long long v, long long e) {
  if (v < 3) return 1;
  long long cap = 3 * v - 6;
  long long bound = (e + cap - 1) / cap;
  return static_cast<int>(std::max<long long>(1, bound));
}

}  // namespace planedec
