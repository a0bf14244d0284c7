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

#include "planedec/planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace planedec {

SimpleGraph::SimpleGraph(int vertex_count) {
  if (vertex_count < 0) throw InvalidInputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

void SimpleGraph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidInputError("edge endpoint out of range");
  }
  if (u == v) throw InvalidInputError("self-loops are not allowed");
  if (has_edge(u, v)) throw InvalidInputError("duplicate edge");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(nb.begin(), nb.end(), target) != nb.end();
}

std::span<const int> SimpleGraph::neighbors(int v) const {
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<SimpleGraph, std::vector<VertexRef>> make_graph(
    std::span<const Edge> edges) {
  std::vector<VertexRef> vs;
  vs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  SimpleGraph g(static_cast<int>(vs.size()));
  auto id = [&vs](const VertexRef& v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const Edge& e : edges) g.add_edge(id(e.a), id(e.b));
  return {std::move(g), std::move(vs)};
}

namespace {

// ---------------------------------------------------------------------------
// Left-right planarity test with embedding extraction (Brandes formulation).
// Oriented edges get dense ids; -1 stands for "none" throughout.
// ---------------------------------------------------------------------------

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
};

class LRPlanarity {
 public:
  explicit LRPlanarity(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    out_.resize(n_);
    oriented_.resize(n_);
  }

  // Runs orientation + testing. Returns false on a non-planar graph.
  bool test() {
    const long long m = g_.edge_count();
    if (n_ > 2 && m > 3LL * n_ - 6) return false;

    for (int v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots_.push_back(v);
        dfs_orientation(v);
      }
    }
    sort_adjacency();
    for (int r : roots_) {
      if (!dfs_testing(r)) return false;
    }
    return true;
  }

  // Requires a successful test(). Produces clockwise rotations.
  RotationSystem embed() {
    for (std::size_t e = 0; e < edge_to_.size(); ++e) {
      nesting_[e] *= sign(static_cast<int>(e));
    }
    sort_adjacency();

    rot_links_.assign(n_, {});
    first_nbr_.assign(n_, kNone);
    for (int v = 0; v < n_; ++v) {
      int previous = kNone;
      for (int e : ordered_[v]) {
        add_half_edge_cw(v, edge_to_[e], previous);
        previous = edge_to_[e];
      }
    }
    left_ref_.assign(n_, kNone);
    right_ref_.assign(n_, kNone);
    for (int r : roots_) dfs_embedding(r);

    RotationSystem rot;
    rot.order.resize(n_);
    for (int v = 0; v < n_; ++v) {
      int start = first_nbr_[v];
      if (start == kNone) continue;
      int w = start;
      do {
        rot.order[v].push_back(w);
        w = rot_links_[v].at(w).first;
      } while (w != start);
    }
    return rot;
  }

 private:
  int new_edge(int u, int v) {
    int id = static_cast<int>(edge_from_.size());
    edge_from_.push_back(u);
    edge_to_.push_back(v);
    lowpt_.push_back(kNone);
    lowpt2_.push_back(kNone);
    nesting_.push_back(0);
    ref_.push_back(kNone);
    side_.push_back(1);
    lowpt_edge_.push_back(kNone);
    stack_bottom_.push_back(0);
    out_[u].push_back(id);
    oriented_[u].insert(v);
    oriented_[v].insert(u);
    return id;
  }

  void dfs_orientation(int v) {
    int e = parent_edge_[v];
    for (int w : g_.neighbors(v)) {
      if (oriented_[v].count(w)) continue;
      int vw = new_edge(v, w);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {  // tree edge
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        dfs_orientation(w);
      } else {  // back edge
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  void sort_adjacency() {
    ordered_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      ordered_[v] = out_[v];
      std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                       [this](int a, int b) { return nesting_[a] < nesting_[b]; });
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool dfs_testing(int v) {
    int e = parent_edge_[v];
    const std::vector<int> order = ordered_[v];
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      int ei = order[idx];
      stack_bottom_[ei] = stack_.size();
      int w = edge_to_[ei];
      if (ei == parent_edge_[w]) {  // tree edge
        if (!dfs_testing(w)) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge
        if (idx == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) {
      int u = edge_from_[e];
      trim_back_edges(u);
      // side of e is the side of a highest return edge
      if (lowpt_[e] < height_[u]) {
        assert(!stack_.empty());
        int hl = stack_.back().left.high;
        int hr = stack_.back().right.high;
        if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
          ref_[e] = hl;
        } else {
          ref_[e] = hr;
        }
      }
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    while (true) {
      assert(!stack_.empty());
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {
        // merge intervals
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        // align
        ref_[q.right.low] = lowpt_edge_[e];
      }
      if (stack_.size() == stack_bottom_[ei]) break;
    }
    // merge conflicting return edges of e_1,...,e_{i-1} into p.left
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // not planar
      // merge the interval below lowpt(ei) into p.right
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void trim_back_edges(int u) {
    // drop entire conflict pairs
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[p.left.low] = -1;
    }
    if (stack_.empty()) return;
    // one more conflict pair to consider
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high != kNone && edge_to_[p.left.high] == u) {
      p.left.high = ref_[p.left.high];
    }
    if (p.left.high == kNone && p.left.low != kNone) {
      // just emptied
      ref_[p.left.low] = p.right.low;
      side_[p.left.low] = -1;
      p.left.low = kNone;
    }
    while (p.right.high != kNone && edge_to_[p.right.high] == u) {
      p.right.high = ref_[p.right.high];
    }
    if (p.right.high == kNone && p.right.low != kNone) {
      ref_[p.right.low] = p.left.low;
      side_[p.right.low] = -1;
      p.right.low = kNone;
    }
    stack_.push_back(p);
  }

  int sign(int e) {
    // resolve the ref chain iteratively, then fold sides back
    std::vector<int> chain;
    while (ref_[e] != kNone) {
      chain.push_back(e);
      e = ref_[e];
    }
    int s = side_[e];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      side_[*it] = static_cast<std::int8_t>(side_[*it] * s);
      s = side_[*it];
      ref_[*it] = kNone;
    }
    return s;
  }

  // --- embedding construction ------------------------------------------

  void add_half_edge_cw(int v, int end, int reference) {
    auto& links = rot_links_[v];
    if (reference == kNone) {
      links[end] = {end, end};
      first_nbr_[v] = end;
      return;
    }
    auto& ref_link = links.at(reference);
    int cw_reference = ref_link.first;
    ref_link.first = end;
    links[end] = {cw_reference, reference};
    links.at(cw_reference).second = end;
  }

  void add_half_edge_ccw(int v, int end, int reference) {
    if (reference == kNone) {
      add_half_edge_cw(v, end, kNone);
      return;
    }
    int ccw_reference = rot_links_[v].at(reference).second;
    add_half_edge_cw(v, end, ccw_reference);
    if (first_nbr_[v] == reference) first_nbr_[v] = end;
  }

  void add_half_edge_first(int v, int end) {
    add_half_edge_ccw(v, end, first_nbr_[v]);
  }

  void dfs_embedding(int v) {
    for (int ei : ordered_[v]) {
      int w = edge_to_[ei];
      if (ei == parent_edge_[w]) {  // tree edge
        add_half_edge_first(w, v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        dfs_embedding(w);
      } else {  // back edge
        if (side_[ei] == 1) {
          add_half_edge_cw(w, v, right_ref_[w]);
        } else {
          add_half_edge_ccw(w, v, left_ref_[w]);
          left_ref_[w] = v;
        }
      }
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> roots_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<std::unordered_set<int>> oriented_;

  std::vector<int> edge_from_, edge_to_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<int> ref_;
  std::vector<std::int8_t> side_;
  std::vector<int> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::vector<std::vector<int>> ordered_;

  std::vector<std::unordered_map<int, std::pair<int, int>>> rot_links_;
  std::vector<int> first_nbr_;
  std::vector<int> left_ref_, right_ref_;
};

}  // namespace

bool is_planar(const SimpleGraph& g) {
  LRPlanarity lr(g);
  return lr.test();
}

bool is_planar(std::span<const Edge> edges) {
  return is_planar(make_graph(edges).first);
}

bool is_planar(const Page& page) {
  return is_planar(std::span<const Edge>(page.edges()));
}

std::optional<RotationSystem> planar_embedding(const SimpleGraph& g) {
  LRPlanarity lr(g);
  if (!lr.test()) return std::nullopt;
  return lr.embed();
}

namespace {

// Face tracing: from half-edge (v, w) continue with (w, cw_w(v)).
int traced_orbits(const SimpleGraph& g, const RotationSystem& rot,
                  std::vector<int>* component_of, int* component_count) {
  const int n = g.vertex_count();
  if (static_cast<int>(rot.order.size()) != n) {
    throw InvalidInputError("rotation system has wrong vertex count");
  }
  // structure check: rot covers exactly the edges of g
  std::vector<std::unordered_map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
      int w = rot.order[v][i];
      if (w < 0 || w >= n || w == v || !g.has_edge(v, w)) {
        throw InvalidInputError("rotation lists a non-edge");
      }
      if (!pos[v].emplace(w, static_cast<int>(i)).second) {
        throw InvalidInputError("rotation repeats a neighbor");
      }
    }
    if (pos[v].size() != static_cast<std::size_t>(g.degree(v))) {
      throw InvalidInputError("rotation misses an incident edge");
    }
  }

  // connected components
  component_of->assign(n, kNone);
  int comp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if ((*component_of)[s] != kNone) continue;
    (*component_of)[s] = comp;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if ((*component_of)[w] == kNone) {
          (*component_of)[w] = comp;
          stack.push_back(w);
        }
      }
    }
    ++comp;
  }
  *component_count = comp;

  // orbit count over directed half-edges
  std::unordered_set<std::int64_t> visited;
  auto key = [n](int v, int w) { return static_cast<std::int64_t>(v) * n + w; };
  int orbits = 0;
  for (int v = 0; v < n; ++v) {
    for (int w : rot.order[v]) {
      if (visited.count(key(v, w))) continue;
      ++orbits;
      int cv = v, cw = w;
      do {
        visited.insert(key(cv, cw));
        const auto& order = rot.order[cw];
        int i = pos[cw].at(cv);
        int next = order[(static_cast<std::size_t>(i) + 1) % order.size()];
        cv = cw;
        cw = next;
      } while (!(cv == v && cw == w));
    }
  }
  return orbits;
}

}  // namespace

bool validate_embedding(const SimpleGraph& g, const RotationSystem& rot) {
  std::vector<int> component_of;
  int components = 0;
  int orbits = traced_orbits(g, rot, &component_of, &components);

  // Per-component Euler relation V - E + F = 2; components without edges
  // have no half-edge orbits and are trivially planar.
  std::vector<long long> vcount(components, 0), ecount(components, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++vcount[component_of[v]];
    ecount[component_of[v]] += g.degree(v);
  }
  long long expected = 0;
  for (int c = 0; c < components; ++c) {
    ecount[c] /= 2;
    if (ecount[c] > 0) expected += ecount[c] - vcount[c] + 2;
  }
  return orbits == expected;
}

int face_count(const SimpleGraph& g, const RotationSystem& rot) {
  std::vector<int> component_of;
  int components = 0;
  return traced_orbits(g, rot, &component_of, &components);
}

// ---------------------------------------------------------------------------
// Naive oracle: exhaustive K_5 / K_{3,3} minor search on <= 12 vertices.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxNaive = 12;

// Adjacency rows as bitmasks; vertices are compact 0..n-1.
struct BitGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxNaive> row{};

  long long edges() const {
    long long total = 0;
    for (int i = 0; i < n; ++i) total += std::popcount(row[i]);
    return total / 2;
  }

  bool operator==(const BitGraph& other) const {
    return n == other.n &&
           std::equal(row.begin(), row.begin() + n, other.row.begin());
  }
};

struct BitGraphHash {
  std::size_t operator()(const BitGraph& g) const {
    std::uint64_t h = 1469598103934665603ULL;
    h = (h ^ static_cast<std::uint64_t>(g.n)) * 1099511628211ULL;
    for (int i = 0; i < g.n; ++i) {
      h = (h ^ g.row[i]) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Removes vertex `victim`, compacting labels downward.
BitGraph drop_vertex(const BitGraph& g, int victim) {
  BitGraph out;
  out.n = g.n - 1;
  for (int i = 0, oi = 0; i < g.n; ++i) {
    if (i == victim) continue;
    std::uint16_t bits = g.row[i];
    std::uint16_t low = bits & static_cast<std::uint16_t>((1u << victim) - 1);
    std::uint16_t high = static_cast<std::uint16_t>((bits >> (victim + 1)) << victim);
    out.row[oi++] = static_cast<std::uint16_t>(low | high);
  }
  return out;
}

// Contracts edge (a, b): b's neighbors fold into a, then b disappears.
BitGraph contract(const BitGraph& g, int a, int b) {
  BitGraph merged = g;
  merged.row[a] |= g.row[b];
  for (int w = 0; w < g.n; ++w) {
    if (g.row[b] & (1u << w)) merged.row[w] |= (1u << a);
  }
  merged.row[a] &= static_cast<std::uint16_t>(~(1u << a));
  return drop_vertex(merged, b);
}

// Deletes degree <= 1 vertices and suppresses degree-2 vertices; both are
// safe for K_5/K_{3,3} minor existence (their minimum degree is 3).
BitGraph simplify(BitGraph g) {
  bool changed = true;
  while (changed && g.n > 0) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      int deg = std::popcount(g.row[v]);
      if (deg <= 1) {
        g = drop_vertex(g, v);
        changed = true;
        break;
      }
      if (deg == 2) {
        int a = std::countr_zero(g.row[v]);
        g = contract(g, a, v);
        changed = true;
        break;
      }
    }
  }
  return g;
}

bool has_k5_subgraph(const BitGraph& g) {
  std::array<int, kMaxNaive> cand{};
  int k = 0;
  for (int v = 0; v < g.n; ++v) {
    if (std::popcount(g.row[v]) >= 4) cand[k++] = v;
  }
  if (k < 5) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (!(g.row[cand[a]] & (1u << cand[b]))) continue;
      for (int c = b + 1; c < k; ++c) {
        std::uint16_t ab = g.row[cand[a]] & g.row[cand[b]];
        if (!(ab & (1u << cand[c]))) continue;
        std::uint16_t abc = ab & g.row[cand[c]];
        for (int d = c + 1; d < k; ++d) {
          if (!(abc & (1u << cand[d]))) continue;
          std::uint16_t abcd = abc & g.row[cand[d]];
          for (int e = d + 1; e < k; ++e) {
            if (abcd & (1u << cand[e])) return true;
          }
        }
      }
    }
  return false;
}

bool has_k33_subgraph(const BitGraph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c) {
        std::uint16_t common = g.row[a] & g.row[b] & g.row[c];
        common &= static_cast<std::uint16_t>(~((1u << a) | (1u << b) | (1u << c)));
        if (std::popcount(common) >= 3) return true;
      }
  return false;
}

class MinorSearch {
 public:
  bool has_forbidden_minor(const BitGraph& start) { return search(simplify(start)); }

 private:
  bool search(const BitGraph& g) {
    if (g.n <= 4) return false;
    long long e = g.edges();
    if (e <= 8) return false;                       // K_{3,3} needs 9 edges
    if (e > 3LL * g.n - 6) return true;             // beyond the planar bound
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
    bool found = has_k5_subgraph(g) || has_k33_subgraph(g);
    if (!found) {
      for (int v = 0; v < g.n && !found; ++v) {
        for (int w = v + 1; w < g.n && !found; ++w) {
          if (g.row[v] & (1u << w)) {
            found = search(simplify(contract(g, v, w)));
          }
        }
      }
    }
    memo_.emplace(g, found);
    return found;
  }

  std::unordered_map<BitGraph, bool, BitGraphHash> memo_;
};

}  // namespace

bool naive_is_planar(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxNaive) {
    throw InvalidInputError("naive_is_planar supports at most 12 vertices");
  }
  BitGraph bg;
  bg.n = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    bg.row[u] |= static_cast<std::uint16_t>(1u << v);
    bg.row[v] |= static_cast<std::uint16_t>(1u << u);
  }
  MinorSearch search;
  return !search.has_forbidden_minor(bg);
}

}  // namespace planedec
