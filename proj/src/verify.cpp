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

#include "planedec/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "planedec/planarity.hpp"

namespace planedec {

bool VerificationReport::all_pages_planar() const {
  return std::all_of(pages_planar.begin(), pages_planar.end(),
                     [](bool b) { return b; });
}

VerificationReport verify_decomposition(const std::vector<int>& part_sizes,
                                        const std::vector<Page>& pages,
                                        std::optional<int> expected_count) {
  check_part_sizes(part_sizes);
  for (const Page& page : pages) {
    for (const Edge& e : page.edges()) {
      if (!label_fits(part_sizes, e.a) || !label_fits(part_sizes, e.b)) {
        throw InvalidInputError("edge " + e.a.label() + "-" + e.b.label() +
                                " uses labels outside the graph");
      }
    }
  }

  VerificationReport report;
  report.page_count = static_cast<int>(pages.size());
  report.expected_count = expected_count;

  const std::vector<Edge> target = complete_multipartite_edges(part_sizes);

  std::vector<Edge> seen;
  for (const Page& page : pages) {
    seen.insert(seen.end(), page.edges().begin(), page.edges().end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) {
    if (seen[i] == seen[i + 1] &&
        (report.duplicate_edges.empty() || !(report.duplicate_edges.back() == seen[i]))) {
      report.duplicate_edges.push_back(seen[i]);
    }
  }
  std::vector<Edge> covered = seen;
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  std::set_difference(target.begin(), target.end(), covered.begin(),
                      covered.end(), std::back_inserter(report.missing_edges));
  std::set_difference(covered.begin(), covered.end(), target.begin(),
                      target.end(), std::back_inserter(report.foreign_edges));
  report.is_partition = report.duplicate_edges.empty() &&
                        report.missing_edges.empty() &&
                        report.foreign_edges.empty();

  report.pages_planar.reserve(pages.size());
  for (const Page& page : pages) {
    bool planar = is_planar(page);
    if (page.vertices().size() <= 12) {
      auto [g, labels] = make_graph(std::span<const Edge>(page.edges()));
      if (naive_is_planar(g) != planar) {
        throw std::logic_error("planarity engines disagree on a small page");
      }
    }
    report.pages_planar.push_back(planar);
  }

  if (expected_count.has_value()) {
    report.count_matches = (report.page_count == *expected_count);
  }
  report.overall = report.is_partition && report.all_pages_planar() &&
                   report.count_matches.value_or(true);
  return report;
}

VerificationReport verify_decomposition(const Decomposition& d,
                                        std::optional<int> expected_count) {
  return verify_decomposition(d.part_sizes, d.pages, expected_count);
}

}  // namespace planedec
