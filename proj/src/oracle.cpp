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

#include "planedec/oracle.hpp"

#include <algorithm>

namespace planedec {

namespace {

bool has_triangle(const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w != v && g.has_edge(v, w)) return true;
    }
  }
  return false;
}

class ThicknessSearch {
 public:
  ThicknessSearch(const SimpleGraph& g, long long budget)
      : g_(g), budget_(budget), order_(g.edges()) {
    // fixed edge order: descending endpoint degree sum, lexicographic ties;
    // the ordering is part of the deterministic contract
    std::stable_sort(order_.begin(), order_.end(),
                     [this](const auto& a, const auto& b) {
                       int da = g_.degree(a.first) + g_.degree(a.second);
                       int db = g_.degree(b.first) + g_.degree(b.second);
                       if (da != db) return da > db;
                       return a < b;
                     });
  }

  long long nodes() const { return nodes_; }
  bool budget_exhausted() const { return exhausted_; }

  // True iff the edges fit into k planar pages; fills `pages` on success.
  bool fits(int k, std::vector<std::vector<std::pair<int, int>>>* pages) {
    assign_.assign(order_.size(), -1);
    exhausted_ = false;
    if (!dfs(0, 0, k)) return false;
    pages->assign(static_cast<std::size_t>(k), {});
    for (std::size_t i = 0; i < order_.size(); ++i) {
      (*pages)[static_cast<std::size_t>(assign_[i])].push_back(order_[i]);
    }
    while (!pages->empty() && pages->back().empty()) pages->pop_back();
    return true;
  }

 private:
  bool page_planar(int page) const {
    SimpleGraph h(g_.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (assign_[i] == page) h.add_edge(order_[i].first, order_[i].second);
    }
    return is_planar(h);
  }

  bool dfs(std::size_t idx, int used, int k) {
    if (idx == order_.size()) return true;
    int limit = std::min(k - 1, used);  // first unused page has index `used`
    for (int page = 0; page <= limit; ++page) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      assign_[idx] = page;
      // a fresh page holds a single edge; planarity is only at risk when
      // the edge joins a page that already has content
      if (page == used || page_planar(page)) {
        if (dfs(idx + 1, std::max(used, page + 1), k)) return true;
        if (exhausted_) {
          assign_[idx] = -1;
          return false;
        }
      }
      assign_[idx] = -1;
    }
    return false;
  }

  const SimpleGraph& g_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::pair<int, int>> order_;
  std::vector<int> assign_;
};

}  // namespace

int thickness_lower_bound(const SimpleGraph& g) {
  const long long v = g.vertex_count();
  const long long e = g.edge_count();
  if (v < 3 || e == 0) return 1;
  long long cap = has_triangle(g) ? 3 * v - 6 : 2 * v - 4;
  if (cap <= 0) return 1;
  return static_cast<int>(std::max<long long>(1, (e + cap - 1) / cap));
}

OracleResult exact_thickness(const SimpleGraph& g, int k_max,
                             long long node_budget) {
  if (k_max < 1) throw InvalidInputError("k_max must be >= 1");
  OracleResult result;
  ThicknessSearch search(g, node_budget);

  const int lb = thickness_lower_bound(g);
  for (int k = lb; k <= k_max; ++k) {
    std::vector<std::vector<std::pair<int, int>>> pages;
    bool ok = search.fits(k, &pages);
    result.nodes_explored = search.nodes();
    if (search.budget_exhausted()) {
      result.kind = OracleResult::Kind::BudgetExhausted;
      result.k = k;
      return result;
    }
    if (ok) {
      // witness sanity: partition of E(g), every page planar
      long long total = 0;
      for (const auto& page : pages) {
        SimpleGraph h(g.vertex_count());
        for (auto [u, v] : page) h.add_edge(u, v);
        if (!is_planar(h)) {
          throw ConstructionError("oracle produced a non-planar witness page");
        }
        total += static_cast<long long>(page.size());
      }
      SimpleGraph all(g.vertex_count());
      for (const auto& page : pages) {
        for (auto [u, v] : page) all.add_edge(u, v);  // throws on duplicates
      }
      if (total != g.edge_count()) {
        throw ConstructionError("oracle witness does not cover the edge set");
      }
      result.kind = OracleResult::Kind::Exact;
      result.k = std::max<int>(1, static_cast<int>(pages.size()));
      result.witness = std::move(pages);
      return result;
    }
  }
  result.kind = OracleResult::Kind::LowerBoundOnly;
  result.k = k_max + 1;
  return result;
}

}  // namespace planedec
