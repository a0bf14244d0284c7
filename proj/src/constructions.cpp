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

#include "planedec/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "planedec/base_decomposition.hpp"
#include "planedec/planarity.hpp"
#include "planedec/small_cases.hpp"
#include "planedec/verify.hpp"

namespace planedec {

namespace {

const auto U = [](int i) { return VertexRef::u(i); };
const auto V = [](int i) { return VertexRef::v(i); };

// ---------------------------------------------------------------------------
// Table encoding. Each anchor family has, per parity of the block index r,
// a list of (apex, side, subscripts) rows. A subscript is either relative
// (4r + value, wrapped into 1..4p) or an absolute index, may be guarded by
// a condition on r, and may carry the group membership annotation that we
// turn into a runtime assertion.
// ---------------------------------------------------------------------------

enum class Cond { Always, REq1, REqP, REqPm1, RNe1AndP, RNeP, RNePm1 };

bool cond_holds(Cond c, int r, int p) {
  switch (c) {
    case Cond::Always: return true;
    case Cond::REq1: return r == 1;
    case Cond::REqP: return r == p;
    case Cond::REqPm1: return r == p - 1;
    case Cond::RNe1AndP: return r != 1 && r != p;
    case Cond::RNeP: return r != p;
    case Cond::RNePm1: return r != p - 1;
  }
  return false;
}

enum class ApexSym { X, X1, X2, UAdd1, UAdd2, VAdd1, VAdd2 };

VertexRef apex_vertex(ApexSym sym, int p) {
  switch (sym) {
    case ApexSym::X:
    case ApexSym::X1: return VertexRef::x1();
    case ApexSym::X2: return VertexRef::x2();
    case ApexSym::UAdd1: return VertexRef::u(4 * p + 1);
    case ApexSym::UAdd2: return VertexRef::u(4 * p + 2);
    case ApexSym::VAdd1: return VertexRef::v(4 * p + 1);
    case ApexSym::VAdd2: return VertexRef::v(4 * p + 2);
  }
  throw InvalidInputError("corrupt apex symbol");
}

std::string apex_name(ApexSym sym) {
  switch (sym) {
    case ApexSym::X: return "x";
    case ApexSym::X1: return "x1";
    case ApexSym::X2: return "x2";
    case ApexSym::UAdd1: return "u_extra1";
    case ApexSym::UAdd2: return "u_extra2";
    case ApexSym::VAdd1: return "v_extra1";
    case ApexSym::VAdd2: return "v_extra2";
  }
  return "?";
}

struct Term {
  int value;
  bool absolute = false;
  Cond cond = Cond::Always;
  std::optional<BlockGroup> group;
};

// Shorthand builders keep the row constants compact.
Term rel(int value) { return {value, false, Cond::Always, std::nullopt}; }
Term rel(int value, BlockGroup g) { return {value, false, Cond::Always, g}; }
Term rel(int value, BlockGroup g, Cond c) { return {value, false, c, g}; }
Term fixed(int value, Cond c) { return {value, true, c, std::nullopt}; }
Term fixed(int value, BlockGroup g, Cond c) { return {value, true, c, g}; }

struct AdditionRow {
  ApexSym apex;
  Part side;  // Part::U when the subscripts index u_j, Part::V for v_j
  std::vector<Term> odd_terms;
  std::vector<Term> even_terms;
};

using Rows = std::vector<AdditionRow>;

// K_{1,4p+2,4p+2}, even p.
const Rows& k1_even_rows() {
  static const Rows rows = {
      {ApexSym::X, Part::U,
       {rel(-3), rel(-1), rel(0), rel(6, BlockGroup::U1)},
       {rel(-3), rel(-2), rel(0), rel(7, BlockGroup::U2)}},
      {ApexSym::X, Part::V,
       {rel(-3), rel(-2), rel(-1), rel(1, BlockGroup::V1)},
       {rel(-2), rel(-1), rel(0), rel(4, BlockGroup::V2)}},
      {ApexSym::VAdd1, Part::U,
       {rel(11, BlockGroup::U2), rel(12, BlockGroup::U2)},
       {rel(5, BlockGroup::U1), rel(6, BlockGroup::U1)}},
      {ApexSym::VAdd2, Part::U,
       {rel(7, BlockGroup::U2), rel(8, BlockGroup::U2)},
       {rel(1, BlockGroup::U1), rel(2, BlockGroup::U1)}},
      {ApexSym::UAdd1, Part::V,
       {rel(10, BlockGroup::V2), rel(12, BlockGroup::V2)},
       {rel(5, BlockGroup::V1), rel(7, BlockGroup::V1)}},
      {ApexSym::UAdd2, Part::V,
       {rel(6, BlockGroup::V2), rel(8, BlockGroup::V2)},
       {rel(1, BlockGroup::V1), rel(3, BlockGroup::V1)}},
  };
  return rows;
}

// K_{1,4p+2,4p+2}, odd p; exceptions at r = 1, p, p-1.
const Rows& k1_odd_rows() {
  static const Rows rows = {
      {ApexSym::X, Part::U,
       {rel(-3), rel(-1), rel(0), rel(6, BlockGroup::U1, Cond::RNeP),
        fixed(2, BlockGroup::U1, Cond::REqP)},
       {rel(-3), rel(-2), rel(0), rel(7, BlockGroup::U2, Cond::RNePm1),
        fixed(7, BlockGroup::U2, Cond::REqPm1)}},
      {ApexSym::X, Part::V,
       {rel(-3), rel(-2), rel(-1), fixed(4, Cond::REq1),
        fixed(5, BlockGroup::V1, Cond::REq1), rel(1, BlockGroup::V1, Cond::RNe1AndP)},
       {rel(-2), rel(-1), rel(0), rel(4, BlockGroup::V2)}},
      {ApexSym::VAdd1, Part::U,
       {rel(11, BlockGroup::U2, Cond::RNeP), rel(12, BlockGroup::U2, Cond::RNeP),
        fixed(5, BlockGroup::U1, Cond::REqP), fixed(6, BlockGroup::U1, Cond::REqP)},
       {rel(5, BlockGroup::U1), rel(6, BlockGroup::U1)}},
      {ApexSym::VAdd2, Part::U,
       {rel(7, BlockGroup::U2), rel(8, BlockGroup::U2)},
       {rel(1, BlockGroup::U1), rel(2, BlockGroup::U1)}},
      {ApexSym::UAdd1, Part::V,
       {rel(10, BlockGroup::V2, Cond::RNeP), rel(12, BlockGroup::V2, Cond::RNeP),
        fixed(6, BlockGroup::V2, Cond::REqP), fixed(8, BlockGroup::V2, Cond::REqP)},
       {rel(5, BlockGroup::V1), rel(7, BlockGroup::V1)}},
      {ApexSym::UAdd2, Part::V,
       {rel(6, BlockGroup::V2, Cond::RNeP), rel(8, BlockGroup::V2, Cond::RNeP),
        fixed(5, BlockGroup::V1, Cond::REqP), fixed(7, BlockGroup::V1, Cond::REqP)},
       {rel(1, BlockGroup::V1), rel(3, BlockGroup::V1)}},
  };
  return rows;
}

// K_{2,4p+1,4p+1}, even p.
const Rows& k2_even_rows() {
  static const Rows rows = {
      {ApexSym::X1, Part::U,
       {rel(-1), rel(0), rel(5, BlockGroup::U1)},
       {rel(-3), rel(-2), rel(8, BlockGroup::U2)}},
      {ApexSym::X1, Part::V,
       {rel(-3), rel(-1), rel(1, BlockGroup::V1)},
       {rel(-2), rel(0), rel(4, BlockGroup::V2)}},
      {ApexSym::X2, Part::U,
       {rel(-1), rel(0), rel(3, BlockGroup::U2)},
       {rel(-3), rel(-2), rel(2, BlockGroup::U1)}},
      {ApexSym::X2, Part::V,
       {rel(-2), rel(0), rel(7, BlockGroup::V1)},
       {rel(-3), rel(-1), rel(6, BlockGroup::V2)}},
      {ApexSym::UAdd1, Part::V, {rel(-2), rel(-1)}, {rel(-2), rel(-1)}},
      {ApexSym::VAdd1, Part::U,
       {rel(4, BlockGroup::U2), rel(8, BlockGroup::U2)},
       {rel(-11, BlockGroup::U1), rel(-7, BlockGroup::U1)}},
  };
  return rows;
}

// K_{2,4p+1,4p+1}, odd p; exceptions at r = 1, p, p-1.
const Rows& k2_odd_rows() {
  static const Rows rows = {
      {ApexSym::X1, Part::U,
       {rel(-1), rel(0), rel(5, BlockGroup::U1, Cond::RNeP),
        fixed(1, BlockGroup::U1, Cond::REqP)},
       {rel(-3), rel(-2), rel(8, BlockGroup::U2, Cond::RNePm1),
        fixed(8, BlockGroup::U2, Cond::REqPm1)}},
      {ApexSym::X1, Part::V,
       {rel(-3), rel(-1), rel(1, BlockGroup::V1, Cond::RNeP)},
       {rel(-2), rel(0), rel(4, BlockGroup::V2)}},
      {ApexSym::X2, Part::U,
       {rel(-1), rel(0), rel(3, BlockGroup::U2, Cond::RNeP),
        fixed(8, BlockGroup::U2, Cond::REqP)},
       {rel(-3), rel(-2), rel(2, BlockGroup::U1)}},
      {ApexSym::X2, Part::V,
       {rel(-2), rel(0), rel(7, BlockGroup::V1, Cond::RNeP),
        fixed(3, BlockGroup::V1, Cond::REqP)},
       {rel(-3), rel(-1), rel(6, BlockGroup::V2, Cond::RNePm1),
        fixed(6, BlockGroup::V2, Cond::REqPm1)}},
      {ApexSym::UAdd1, Part::V, {rel(-2), rel(-1)}, {rel(-2), rel(-1)}},
      {ApexSym::VAdd1, Part::U,
       {rel(4, BlockGroup::U2, Cond::RNeP), rel(8, BlockGroup::U2, Cond::RNeP),
        fixed(4, BlockGroup::U2, Cond::REqP)},
       {rel(-11, BlockGroup::U1), rel(-7, BlockGroup::U1)}},
  };
  return rows;
}

struct Deletions {
  std::vector<Edge> freed;  // moved to the final page
};

// Both families free two edges of the block cycle structure per page; the
// odd-p K_{1,*} case additionally frees u_1 v_2 from page 1.
Deletions k1_deletions(int r, AnchorCase c) {
  const int b = 4 * r;
  Deletions d;
  if (r % 2 == 1) {
    d.freed = {Edge(V(b - 3), U(b)), Edge(U(b), V(b - 1))};
  } else {
    d.freed = {Edge(V(b), U(b - 3)), Edge(U(b - 3), V(b - 2))};
  }
  if (c == AnchorCase::OddGeneric && r == 1) {
    d.freed.push_back(Edge(V(2), U(1)));
  }
  return d;
}

Deletions k2_deletions(int r, int /*p*/) {
  const int b = 4 * r;
  Deletions d;
  if (r % 2 == 1) {
    d.freed = {Edge(V(b - 3), U(b)), Edge(U(b - 1), V(b - 2))};
  } else {
    d.freed = {Edge(V(b), U(b - 3)), Edge(U(b - 2), V(b - 1))};
  }
  return d;
}

Page build_block_page(const Rows& rows, const Deletions& dels, int r, int p) {
  std::vector<Page> base = base_pages(p);
  Page page = base[static_cast<std::size_t>(r - 1)];
  for (const Edge& e : dels.freed) page.remove(e);

  for (const AdditionRow& row : rows) {
    const auto& terms = (r % 2 == 1) ? row.odd_terms : row.even_terms;
    VertexRef apex = apex_vertex(row.apex, p);
    for (const Term& t : terms) {
      if (!cond_holds(t.cond, r, p)) continue;
      int j = t.absolute ? t.value : normalize_subscript(4 * r + t.value, p);
      VertexRef target = (row.side == Part::U) ? U(j) : V(j);
      if (t.group && !block_group_contains(*t.group, r, p, target)) {
        std::ostringstream msg;
        msg << "membership assertion failed: " << target.label()
            << " is outside its annotated group in block r=" << r << ", p=" << p
            << " (row " << apex_name(row.apex) << ")";
        throw ConstructionError(msg.str());
      }
      page.add(Edge(apex, target));
    }
  }
  return page;
}

// Residue-class star: apex joined to side_j for j in {4r-3..4r : r in rs}.
void add_block_star(Page& page, VertexRef apex, Part side,
                    const std::vector<int>& rs) {
  for (int r : rs) {
    for (int j = 4 * r - 3; j <= 4 * r; ++j) {
      page.add(Edge(apex, side == Part::U ? U(j) : V(j)));
    }
  }
}

std::vector<int> odd_blocks(int from, int to) {
  std::vector<int> rs;
  for (int r = from; r <= to; r += 2) rs.push_back(r);
  return rs;
}

std::vector<int> even_blocks(int from, int to) {
  std::vector<int> rs;
  for (int r = from; r <= to; r += 2) rs.push_back(r);
  return rs;
}

void require_valid(const Decomposition& d, int expected_pages,
                   const std::string& context) {
  VerificationReport report = verify_decomposition(d, expected_pages);
  if (report.overall) return;
  std::ostringstream msg;
  msg << context << ": verification failed;";
  if (!report.is_partition) {
    msg << " partition broken (" << report.duplicate_edges.size() << " duplicate, "
        << report.missing_edges.size() << " missing, "
        << report.foreign_edges.size() << " foreign edges;";
    auto show = [&msg](const char* tag, const std::vector<Edge>& es) {
      if (es.empty()) return;
      msg << " " << tag << ":";
      for (std::size_t i = 0; i < es.size() && i < 4; ++i) {
        msg << " " << es[i].a.label() << "-" << es[i].b.label();
      }
    };
    show("duplicate", report.duplicate_edges);
    show("missing", report.missing_edges);
    show("foreign", report.foreign_edges);
    msg << ")";
  }
  for (std::size_t i = 0; i < report.pages_planar.size(); ++i) {
    if (!report.pages_planar[i]) msg << " page " << (i + 1) << " non-planar;";
  }
  if (report.count_matches.has_value() && !*report.count_matches) {
    msg << " page count " << report.page_count << " != expected "
        << expected_pages << ";";
  }
  throw ConstructionError(msg.str());
}

// Every u_j/v_j must receive its edge to each apex exactly once across the
// pages; this reproduces the subscript-union computation of the anchor
// proofs with named diagnostics.
void check_apex_coverage(const std::vector<Page>& pages, VertexRef apex,
                         int n, const std::string& context) {
  std::map<VertexRef, int> count;
  for (const Page& page : pages) {
    for (const Edge& e : page.edges()) {
      if (e.a == apex) ++count[e.b];
      else if (e.b == apex) ++count[e.a];
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (VertexRef w : {U(j), V(j)}) {
      auto it = count.find(w);
      int c = (it == count.end()) ? 0 : it->second;
      if (c != 1) {
        std::ostringstream msg;
        msg << context << ": apex " << apex.label() << " meets " << w.label()
            << " " << c << " times (expected once)";
        throw ConstructionError(msg.str());
      }
    }
  }
}

}  // namespace

AnchorCase anchor_case_for(int p) {
  if (p < 0) throw InvalidInputError("p must be >= 0");
  if (p <= 3) return AnchorCase::Small;
  return (p % 2 == 0) ? AnchorCase::EvenGeneric : AnchorCase::OddGeneric;
}

int anchor_n(const GraphFamily& family, int n) {
  if (n < 1) throw InvalidInputError("n must be >= 1");
  int residue;
  switch (family.tag) {
    case FamilyTag::K1NN: residue = 2; break;
    case FamilyTag::K2NN:
    case FamilyTag::K11NN: residue = 1; break;
    default:
      throw InvalidInputError("family has no anchor ladder");
  }
  int m = n;
  while (m % 4 != residue) ++m;
  if (thickness_formula(family, m) != thickness_formula(family, n)) {
    throw ConstructionError("anchor ladder changed the thickness value");
  }
  return m;
}

Page k1nn_block_page(int r, int p, AnchorCase c) {
  if (r < 1 || r > p) throw InvalidInputError("block index r out of range");
  switch (c) {
    case AnchorCase::EvenGeneric:
      return build_block_page(k1_even_rows(), k1_deletions(r, c), r, p);
    case AnchorCase::OddGeneric:
      return build_block_page(k1_odd_rows(), k1_deletions(r, c), r, p);
    case AnchorCase::Small:
      throw InvalidInputError("small cases are curated, not table-driven");
  }
  throw InvalidInputError("corrupt anchor case");
}

Page k1nn_final_page(int p, AnchorCase c) {
  const VertexRef x = VertexRef::x1();
  const int n = 4 * p + 2;
  Page page;
  page.add(Edge(x, V(4 * p + 1)));
  page.add(Edge(x, U(4 * p + 1)));
  page.add(Edge(x, V(4 * p + 2)));
  page.add(Edge(x, U(4 * p + 2)));

  auto add_star_pair = [&page](VertexRef vap, VertexRef uap, Part side,
                               const std::vector<int>& rs,
                               const std::vector<int>& extras) {
    for (int r : rs) {
      for (int j = 4 * r - 3; j <= 4 * r; ++j) {
        page.add(Edge(vap, side == Part::U ? U(j) : V(j)));
        page.add(Edge(uap, side == Part::U ? V(j) : U(j)));
      }
    }
    // the two stars over the appended vertices list each other once each;
    // a plain add would see the second listing as a duplicate
    for (int j : extras) {
      page.add_if_absent(Edge(vap, side == Part::U ? U(j) : V(j)));
      page.add_if_absent(Edge(uap, side == Part::U ? V(j) : U(j)));
    }
  };

  if (c == AnchorCase::EvenGeneric) {
    add_star_pair(V(4 * p + 1), U(4 * p + 1), Part::U, odd_blocks(1, p - 1),
                  {4 * p + 2});
    add_star_pair(V(4 * p + 2), U(4 * p + 2), Part::U, even_blocks(2, p),
                  {4 * p + 1});
    for (int r : odd_blocks(1, p - 1)) {
      page.add(Edge(V(4 * r - 3), U(4 * r)));
      page.add(Edge(U(4 * r), V(4 * r - 1)));
    }
    for (int r : even_blocks(2, p)) {
      page.add(Edge(V(4 * r), U(4 * r - 3)));
      page.add(Edge(U(4 * r - 3), V(4 * r - 2)));
    }
  } else if (c == AnchorCase::OddGeneric) {
    // `merge_extra` is the cross listing: the star of each appended vertex
    // names the other appended vertex once, so that one edge shows up twice.
    auto add_star = [&page](VertexRef apex, Part side, const std::vector<int>& rs,
                            const std::vector<int>& extras, int merge_extra) {
      add_block_star(page, apex, side, rs);
      for (int j : extras) {
        page.add(Edge(apex, side == Part::U ? U(j) : V(j)));
      }
      page.add_if_absent(Edge(apex, side == Part::U ? U(merge_extra) : V(merge_extra)));
    };
    add_star(V(4 * p + 1), Part::U, odd_blocks(3, p), {7, 8}, 4 * p + 2);
    add_star(U(4 * p + 1), Part::V, odd_blocks(3, p), {5, 7}, 4 * p + 2);
    std::vector<int> one_and_evens = {1};
    for (int r : even_blocks(4, p - 1)) one_and_evens.push_back(r);
    add_star(V(4 * p + 2), Part::U, one_and_evens, {5, 6}, 4 * p + 1);
    add_star(U(4 * p + 2), Part::V, one_and_evens, {6, 8}, 4 * p + 1);
    page.add(Edge(U(1), V(2)));
    for (int r : odd_blocks(1, p)) {
      page.add(Edge(V(4 * r - 3), U(4 * r)));
      page.add(Edge(U(4 * r), V(4 * r - 1)));
    }
    for (int r : even_blocks(2, p - 1)) {
      page.add(Edge(V(4 * r), U(4 * r - 3)));
      page.add(Edge(U(4 * r - 3), V(4 * r - 2)));
    }
  } else {
    throw InvalidInputError("small cases are curated, not table-driven");
  }

  for (int j = 1; j <= n; ++j) page.add(Edge(U(j), V(j)));
  return page;
}

Decomposition k1nn_anchor(int p) {
  if (p < 0) throw InvalidInputError("p must be >= 0");
  AnchorCase c = anchor_case_for(p);
  if (c == AnchorCase::Small) return k1nn_small_case(p);

  const int n = 4 * p + 2;
  Decomposition d;
  d.family = GraphFamily::k1nn();
  d.n = n;
  d.part_sizes = {1, n, n};
  for (int r = 1; r <= p; ++r) d.pages.push_back(k1nn_block_page(r, p, c));
  d.pages.push_back(k1nn_final_page(p, c));
  std::ostringstream prov;
  prov << "anchor K_{1," << n << "," << n << "} (p=" << p << ", "
       << (c == AnchorCase::EvenGeneric ? "even" : "odd") << " case)";
  d.provenance = prov.str();

  std::string context = "k1nn_anchor(p=" + std::to_string(p) + ")";
  check_apex_coverage(d.pages, VertexRef::x1(), n, context);
  require_valid(d, p + 1, context);
  return d;
}

Page k2nn_block_page(int r, int p, AnchorCase c) {
  if (r < 1 || r > p) throw InvalidInputError("block index r out of range");
  switch (c) {
    case AnchorCase::EvenGeneric:
      return build_block_page(k2_even_rows(), k2_deletions(r, p), r, p);
    case AnchorCase::OddGeneric:
      return build_block_page(k2_odd_rows(), k2_deletions(r, p), r, p);
    case AnchorCase::Small:
      throw InvalidInputError("small cases are curated, not table-driven");
  }
  throw InvalidInputError("corrupt anchor case");
}

Page k2nn_final_page(int p, AnchorCase c) {
  const VertexRef x1 = VertexRef::x1();
  const VertexRef x2 = VertexRef::x2();
  const int n = 4 * p + 1;
  Page page;

  auto add_both_sides = [&page](VertexRef apex, const std::vector<int>& js) {
    for (int j : js) {
      page.add(Edge(apex, U(j)));
      page.add(Edge(apex, V(j)));
    }
  };

  if (c == AnchorCase::EvenGeneric) {
    std::vector<int> x1_js, x2_js;
    for (int r : odd_blocks(1, p - 1)) {
      x1_js.push_back(4 * r - 2);
      x1_js.push_back(4 * r + 3);
    }
    for (int r : even_blocks(2, p)) {
      x2_js.push_back(4 * r - 7);
      x2_js.push_back(4 * r);
    }
    x1_js.push_back(4 * p + 1);
    x2_js.push_back(4 * p + 1);
    add_both_sides(x1, x1_js);
    add_both_sides(x2, x2_js);
    for (int r = 1; r <= p; ++r) {
      page.add(Edge(U(4 * p + 1), V(4 * r - 3)));
      page.add(Edge(U(4 * p + 1), V(4 * r)));
      page.add(Edge(V(4 * p + 1), U(4 * r - 2)));
      page.add(Edge(V(4 * p + 1), U(4 * r - 1)));
    }
  } else if (c == AnchorCase::OddGeneric) {
    std::vector<int> x1u_js = {2}, x1v_js = {2, 4};
    for (int r : odd_blocks(1, p - 2)) {
      x1u_js.push_back(4 * r + 3);
      x1u_js.push_back(4 * r + 6);
      x1v_js.push_back(4 * r + 3);
      x1v_js.push_back(4 * r + 6);
    }
    x1u_js.push_back(4 * p + 1);
    x1v_js.push_back(4 * p + 1);
    std::vector<int> x2u_js = {1, 2, 9}, x2v_js = {1, 8, 9};
    for (int r : even_blocks(4, p - 1)) {
      x2u_js.push_back(4 * r);
      x2u_js.push_back(4 * r + 1);
      x2v_js.push_back(4 * r);
      x2v_js.push_back(4 * r + 1);
    }
    x2u_js.push_back(4 * p + 1);
    x2v_js.push_back(4 * p + 1);
    for (int j : x1u_js) page.add(Edge(x1, U(j)));
    for (int j : x1v_js) page.add(Edge(x1, V(j)));
    for (int j : x2u_js) page.add(Edge(x2, U(j)));
    for (int j : x2v_js) page.add(Edge(x2, V(j)));
    for (int r = 1; r <= p; ++r) {
      page.add(Edge(U(4 * p + 1), V(4 * r - 3)));
      page.add(Edge(U(4 * p + 1), V(4 * r)));
      page.add(Edge(V(4 * p + 1), U(4 * r - 2)));
      page.add(Edge(V(4 * p + 1), U(4 * r - 1)));
    }
    page.add(Edge(V(4 * p + 1), U(4 * p - 7)));
  } else {
    throw InvalidInputError("small cases are curated, not table-driven");
  }

  if (c == AnchorCase::EvenGeneric) {
    for (int r : odd_blocks(1, p - 1)) {
      page.add(Edge(V(4 * r - 3), U(4 * r)));
      page.add(Edge(V(4 * r - 2), U(4 * r - 1)));
    }
    for (int r : even_blocks(2, p)) {
      page.add(Edge(U(4 * r - 3), V(4 * r)));
      page.add(Edge(U(4 * r - 2), V(4 * r - 1)));
    }
  } else {
    for (int r : odd_blocks(1, p)) {
      page.add(Edge(V(4 * r - 3), U(4 * r)));
      page.add(Edge(V(4 * r - 2), U(4 * r - 1)));
    }
    for (int r : even_blocks(2, p - 1)) {
      page.add(Edge(U(4 * r - 3), V(4 * r)));
      page.add(Edge(U(4 * r - 2), V(4 * r - 1)));
    }
  }

  for (int j = 1; j <= n; ++j) page.add(Edge(U(j), V(j)));
  return page;
}

Decomposition k2nn_anchor(int p) {
  if (p < 0) throw InvalidInputError("p must be >= 0");
  AnchorCase c = anchor_case_for(p);
  if (c == AnchorCase::Small) return k2nn_small_case(p);

  const int n = 4 * p + 1;
  Decomposition d;
  d.family = GraphFamily::k2nn();
  d.n = n;
  d.part_sizes = {2, n, n};
  for (int r = 1; r <= p; ++r) d.pages.push_back(k2nn_block_page(r, p, c));
  d.pages.push_back(k2nn_final_page(p, c));
  std::ostringstream prov;
  prov << "anchor K_{2," << n << "," << n << "} (p=" << p << ", "
       << (c == AnchorCase::EvenGeneric ? "even" : "odd") << " case)";
  d.provenance = prov.str();

  std::string context = "k2nn_anchor(p=" + std::to_string(p) + ")";
  check_apex_coverage(d.pages, VertexRef::x1(), n, context);
  check_apex_coverage(d.pages, VertexRef::x2(), n, context);
  require_valid(d, p + 1, context);
  return d;
}

Decomposition k1nn_small_case(int p) {
  if (p < 0 || p > 3) throw InvalidInputError("small case needs 0 <= p <= 3");
  if (p == 0) {
    Decomposition d;
    d.family = GraphFamily::k1nn();
    d.n = 2;
    d.part_sizes = {1, 2, 2};
    d.pages.push_back(Page::from_edges(complete_multipartite_edges({1, 2, 2})));
    d.provenance = "K_{1,2,2} is planar; single page";
    require_valid(d, 1, "k1nn_small_case(p=0)");
    return d;
  }
  return curated_small_case(FamilyTag::K1NN, p);
}

Decomposition k2nn_small_case(int p) {
  if (p < 0 || p > 3) throw InvalidInputError("small case needs 0 <= p <= 3");
  if (p == 0) {
    Decomposition d;
    d.family = GraphFamily::k2nn();
    d.n = 1;
    d.part_sizes = {2, 1, 1};
    d.pages.push_back(Page::from_edges(complete_multipartite_edges({2, 1, 1})));
    d.provenance = "K_{2,1,1} is planar; single page";
    require_valid(d, 1, "k2nn_small_case(p=0)");
    return d;
  }
  return curated_small_case(FamilyTag::K2NN, p);
}

Decomposition apex_matching_pages(int p, int apex_count) {
  if (p < 1) throw InvalidInputError("p must be >= 1");
  if (apex_count != 1 && apex_count != 2) {
    throw InvalidInputError("apex count must be 1 or 2");
  }
  const int n = 4 * p;
  Decomposition d;
  d.family = (apex_count == 1) ? GraphFamily::k1nn() : GraphFamily::k2nn();
  d.n = n;
  d.part_sizes = {apex_count, n, n};
  d.pages = base_pages(p);
  Page& last = d.pages.back();
  for (int i = 1; i <= apex_count; ++i) {
    VertexRef apex = (i == 1) ? VertexRef::x1() : VertexRef::x2();
    for (int j = 1; j <= n; ++j) {
      last.add(Edge(apex, U(j)));
      last.add(Edge(apex, V(j)));
    }
  }
  std::ostringstream prov;
  prov << "base pages of K_{" << n << "," << n << "} with " << apex_count
       << " apex(es) joined across the matching page (p=" << p << ")";
  d.provenance = prov.str();
  require_valid(d, p + 1,
                "apex_matching_pages(p=" + std::to_string(p) +
                    ", apexes=" + std::to_string(apex_count) + ")");
  return d;
}

Decomposition add_x1x2_edge(const Decomposition& d) {
  if (d.part_sizes.size() != 3 || d.part_sizes[0] != 2) {
    throw InvalidInputError("expects a K_{2,m,m}-shaped decomposition");
  }
  if (d.pages.empty()) throw InvalidInputError("decomposition has no pages");
  Edge x1x2(VertexRef::x1(), VertexRef::x2());
  for (const Page& page : d.pages) {
    if (page.contains(x1x2)) {
      throw InvalidInputError("edge x1-x2 already present");
    }
  }
  Decomposition out = d;
  out.family = GraphFamily::k11nn();
  out.part_sizes = {1, 1, d.part_sizes[1], d.part_sizes[2]};
  out.pages.back().add(x1x2);
  out.provenance += "; x1-x2 edge added to the final page";
  if (!is_planar(out.pages.back())) {
    throw ConstructionError(
        "adding the x1-x2 edge made the final page non-planar; the shared-face "
        "expectation fails here and is reported rather than repaired");
  }
  return out;
}

Decomposition delete_to_n(const Decomposition& d, int n_target) {
  if (n_target < 1) throw InvalidInputError("n_target must be >= 1");
  if (n_target > d.n) throw InvalidInputError("n_target exceeds current n");
  if (d.family.tag == FamilyTag::Custom) {
    throw InvalidInputError("vertex deletion needs a named family");
  }
  if (n_target == d.n) return d;

  Decomposition out;
  out.family = d.family;
  out.n = n_target;
  out.part_sizes = d.family.part_sizes(n_target);
  for (const Page& page : d.pages) {
    std::vector<Edge> kept;
    for (const Edge& e : page.edges()) {
      auto survives = [n_target](const VertexRef& v) {
        return (v.part != Part::U && v.part != Part::V) || v.index <= n_target;
      };
      if (survives(e.a) && survives(e.b)) kept.push_back(e);
    }
    if (!kept.empty()) out.pages.push_back(Page::from_edges(std::move(kept)));
  }
  out.provenance = d.provenance + "; restricted to n=" + std::to_string(n_target);
  return out;
}

Decomposition generate(const GraphFamily& family, int n) {
  if (n < 1) throw InvalidInputError("n must be >= 1");
  Decomposition d;
  switch (family.tag) {
    case FamilyTag::KNN: {
      if (n % 4 != 0) {
        throw InvalidInputError(
            "K_{n,n} generation is supported for n = 0 (mod 4) only");
      }
      const int p = n / 4;
      d.family = GraphFamily::knn();
      d.n = n;
      d.part_sizes = {n, n};
      d.pages = base_pages(p);
      d.provenance = "base decomposition of K_{" + std::to_string(n) + "," +
                     std::to_string(n) + "} (p=" + std::to_string(p) + ")";
      break;
    }
    case FamilyTag::K1NN: {
      const int m = anchor_n(family, n);
      d = delete_to_n(k1nn_anchor((m - 2) / 4), n);
      break;
    }
    case FamilyTag::K2NN: {
      const int m = anchor_n(family, n);
      d = delete_to_n(k2nn_anchor((m - 1) / 4), n);
      break;
    }
    case FamilyTag::K11NN: {
      const int m = anchor_n(family, n);
      d = delete_to_n(add_x1x2_edge(k2nn_anchor((m - 1) / 4)), n);
      break;
    }
    case FamilyTag::Custom:
      throw InvalidInputError("no generator for custom part sizes");
  }
  require_valid(d, thickness_formula(family, n),
                "generate(" + family.name() + ", " + std::to_string(n) + ")");
  return d;
}

std::optional<std::vector<Page>> rediscover_pages(
    const std::vector<int>& part_sizes, int page_count, std::uint64_t seed,
    long long max_steps) {
  if (page_count < 1) throw InvalidInputError("page count must be >= 1");
  const std::vector<Edge> edges = complete_multipartite_edges(part_sizes);
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Edge>> pages(static_cast<std::size_t>(page_count));
  auto planar_with = [](const std::vector<Edge>& page, const Edge& extra) {
    std::vector<Edge> trial = page;
    trial.push_back(extra);
    return is_planar(std::span<const Edge>(trial));
  };

  long long steps = 0;
  while (steps < max_steps) {
    // randomized first-fit construction
    for (auto& page : pages) page.clear();
    std::vector<Edge> order = edges;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> homeless;
    std::vector<int> page_order(static_cast<std::size_t>(page_count));
    for (int t = 0; t < page_count; ++t) page_order[static_cast<std::size_t>(t)] = t;
    for (const Edge& e : order) {
      std::shuffle(page_order.begin(), page_order.end(), rng);
      bool placed = false;
      for (int t : page_order) {
        ++steps;
        if (planar_with(pages[static_cast<std::size_t>(t)], e)) {
          pages[static_cast<std::size_t>(t)].push_back(e);
          placed = true;
          break;
        }
      }
      if (!placed) homeless.push_back(e);
    }

    // ejection-chain repair: force a homeless edge in, kick others out
    long long repair = 0;
    const long long repair_cap = 4000;
    std::uniform_int_distribution<int> page_dist(0, page_count - 1);
    while (!homeless.empty() && steps < max_steps && repair < repair_cap) {
      std::uniform_int_distribution<std::size_t> pick_dist(0, homeless.size() - 1);
      std::size_t pick = pick_dist(rng);
      Edge e = homeless[pick];
      homeless.erase(homeless.begin() + static_cast<std::ptrdiff_t>(pick));
      auto& page = pages[static_cast<std::size_t>(page_dist(rng))];
      page.push_back(e);
      while (!is_planar(std::span<const Edge>(page))) {
        ++steps;
        ++repair;
        std::uniform_int_distribution<std::size_t> eject_dist(0, page.size() - 2);
        std::size_t out = eject_dist(rng);  // never the edge just forced in
        homeless.push_back(page[out]);
        page.erase(page.begin() + static_cast<std::ptrdiff_t>(out));
      }
    }
    if (homeless.empty()) {
      std::vector<Page> result;
      for (auto& page : pages) {
        if (!page.empty()) result.push_back(Page::from_edges(std::move(page)));
      }
      if (static_cast<int>(result.size()) == page_count) return result;
    }
  }
  return std::nullopt;
}

}  // namespace planedec
