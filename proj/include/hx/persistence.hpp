#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hx/io.hpp"
#include "hx/mayer_vietoris.hpp"

namespace hx {

using Birth = boost::multiprecision::cpp_rational;

inline std::string birth_str(const Birth& b) {
  std::ostringstream out;
  if (denominator(b) == 1)
    out << numerator(b);
  else
    out << numerator(b) << '/' << denominator(b);
  return out.str();
}

// Monotone family of hypergraphs: level x holds every edge born at or
// before x.
struct Filtration {
  VertexTable ambient;
  std::map<Hyperedge, Birth, EdgeOrder> births;

  // duplicate insertions keep the earliest birth
  void insert(Hyperedge e, const Birth& b) {
    std::sort(e.begin(), e.end());
    auto [it, added] = births.emplace(std::move(e), b);
    if (!added && b < it->second) it->second = b;
  }

  std::vector<Birth> critical_values() const {
    std::set<Birth> s;
    for (const auto& [e, b] : births) s.insert(b);
    return {s.begin(), s.end()};
  }

  Hypergraph level(const Birth& x) const {
    EdgeSet edges;
    for (const auto& [e, b] : births)
      if (b <= x) edges.insert(e);
    return Hypergraph(ambient, std::move(edges));
  }

  Hypergraph final_level() const {
    EdgeSet edges;
    for (const auto& [e, b] : births) edges.insert(e);
    return Hypergraph(ambient, std::move(edges));
  }

  bool empty() const { return births.empty(); }
};

// .flt format: optional "vertices:" header, then lines `birth v_i v_j ...`.
inline Filtration parse_filtration(std::istream& in) {
  Filtration f;
  bool has_header = false, first = true;
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (first && toks[0] == "vertices:") {
      has_header = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (f.ambient.find(toks[i]) >= 0)
          throw parse_error(lineno, "duplicate vertex in header: " + toks[i]);
        f.ambient.add(toks[i]);
      }
      first = false;
      continue;
    }
    first = false;
    lines.emplace_back(lineno, std::move(toks));
  }
  std::vector<std::pair<Birth, std::vector<int>>> parsed;
  for (auto& [ln, toks] : lines) {
    if (toks.size() < 2) throw parse_error(ln, "expected 'birth vertex...'");
    auto [num, den] = parse_fraction(toks[0], ln);
    Birth b(num, den);
    std::vector<int> e;
    for (size_t i = 1; i < toks.size(); ++i) {
      int idx = f.ambient.find(toks[i]);
      if (idx < 0) {
        if (has_header) throw parse_error(ln, "undeclared vertex: " + toks[i]);
        idx = f.ambient.add(toks[i]);
      }
      e.push_back(idx);
    }
    std::sort(e.begin(), e.end());
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] == e[i - 1])
        throw parse_error(ln, "duplicate vertex in hyperedge: " + f.ambient.name(e[i]));
    parsed.emplace_back(std::move(b), std::move(e));
  }
  for (auto& [b, e] : parsed) f.insert(std::move(e), b);
  return f;
}

inline Filtration parse_filtration(const std::string& text) {
  std::istringstream in(text);
  return parse_filtration(in);
}

inline void serialize_filtration(const Filtration& f, std::ostream& out) {
  out << "vertices:";
  for (const auto& n : f.ambient.names()) out << ' ' << n;
  out << '\n';
  for (const auto& [e, b] : f.births) {
    out << birth_str(b);
    for (int v : e) out << ' ' << f.ambient.name(v);
    out << '\n';
  }
}

enum class ClosureKind { lower_delta, delta, bar_lower_delta, bar_delta };

inline ClosureKind parse_closure_kind(const std::string& s) {
  if (s == "delta") return ClosureKind::lower_delta;
  if (s == "Delta") return ClosureKind::delta;
  if (s == "bar-delta" || s == "bar_delta") return ClosureKind::bar_lower_delta;
  if (s == "bar-Delta" || s == "bar_Delta") return ClosureKind::bar_delta;
  throw precondition_error("unknown closure kind '" + s + "'");
}

inline Hypergraph apply_closure(const Hypergraph& h, ClosureKind kind) {
  switch (kind) {
    case ClosureKind::lower_delta: return lower_delta(h);
    case ClosureKind::delta: return delta_closure(h);
    case ClosureKind::bar_lower_delta: return bar_lower_delta(h);
    default: return bar_delta_closure(h);
  }
}

// Level-wise closure: each edge's new birth is the first critical value
// whose closed level contains it.
inline Filtration derived_filtration(const Filtration& f, ClosureKind kind) {
  Filtration out;
  out.ambient = f.ambient;
  for (const Birth& x : f.critical_values()) {
    Hypergraph closed = apply_closure(f.level(x), kind);
    for (const auto& e : closed.edges())
      if (!out.births.count(e)) out.insert(e, x);
  }
  return out;
}

struct Bar {
  long index;
  Birth birth;
  std::optional<Birth> death;  // empty = infinite
};

struct Barcode {
  std::vector<Bar> bars;

  // Bars whose interval [b, d) contains [x, y]; equals the rank of the
  // inclusion-induced map from level x to level y at that index.
  size_t bars_containing(long index, const Birth& x, const Birth& y) const {
    size_t k = 0;
    for (const auto& bar : bars)
      if (bar.index == index && bar.birth <= x && (!bar.death || *bar.death > y)) ++k;
    return k;
  }

  size_t count_at_index(long index) const {
    size_t k = 0;
    for (const auto& bar : bars)
      if (bar.index == index) ++k;
    return k;
  }
};

// Persistent constrained homology (lower variance) or cohomology (upper)
// of a filtration: exact column reduction with cells ordered by
// (birth, dimension, canonical edge order).  Half-open bars; empty bars
// are dropped.
template <class F>
Barcode persistent_homology(const Filtration& f, const ExtOperator<F>& op, long m) {
  Barcode bc;
  auto criticals = f.critical_values();
  if (criticals.empty()) return bc;
  for (const Birth& x : criticals) detail::require_admissible(f.level(x), op);
  bool lower = op.variance() == Variance::lower;
  Hypergraph final = f.final_level();
  ConstrainedComplex<F> cc =
      lower ? constrained_complex(final, op, m) : constrained_cocomplex(final, op, m);

  struct Cell {
    Hyperedge edge;
    Birth birth;
    long node;
  };
  std::vector<Cell> cells;
  for (size_t n = 0; n < cc.node_count(); ++n)
    for (const auto& e : cc.complex.nodes[n].edge_basis)
      cells.push_back({e, f.births.at(e), static_cast<long>(n)});
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return EdgeOrder{}(a.edge, b.edge);
  });
  std::map<Hyperedge, size_t, EdgeOrder> index;
  for (size_t i = 0; i < cells.size(); ++i) index[cells[i].edge] = i;

  auto name_of = [&](const Hyperedge& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + f.ambient.name(e[i]);
    return s + "}";
  };

  std::vector<std::map<size_t, F>> cols(cells.size());
  long top = static_cast<long>(cc.node_count()) - 1;
  for (size_t j = 0; j < cells.size(); ++j) {
    bool has_out = lower ? cells[j].node > 0 : cells[j].node < top;
    if (!has_out) continue;
    Chain<F> img = apply_operator(op, Chain<F>::single(cells[j].edge));
    for (const auto& [e, c] : img.terms) {
      if (e.empty()) continue;
      auto it = index.find(e);
      if (it == index.end())
        throw precondition_error("differential of " + name_of(cells[j].edge) +
                                 " leaves the filtration");
      if (cells[it->second].birth > cells[j].birth)
        throw precondition_error("filtration incompatibility: " + name_of(cells[j].edge) +
                                 " maps onto later-born " + name_of(e));
      cols[j][it->second] = c;
    }
  }

  std::vector<long> pivot_owner(cells.size(), -1);
  for (size_t j = 0; j < cells.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      size_t low = col.rbegin()->first;
      long owner = pivot_owner[low];
      if (owner < 0) break;
      F factor = col.rbegin()->second / cols[owner].rbegin()->second;
      for (const auto& [r, v] : cols[owner]) {
        auto it = col.find(r);
        F nv = (it == col.end() ? F(0) : it->second) - factor * v;
        if (nv.is_zero()) {
          if (it != col.end()) col.erase(it);
        } else {
          col[r] = nv;
        }
      }
    }
    if (!col.empty()) {
      size_t low = col.rbegin()->first;
      pivot_owner[low] = static_cast<long>(j);
      if (cells[low].birth != cells[j].birth)
        bc.bars.push_back({cells[low].node, cells[low].birth, cells[j].birth});
    }
  }
  for (size_t j = 0; j < cells.size(); ++j)
    if (cols[j].empty() && pivot_owner[j] < 0)
      bc.bars.push_back({cells[j].node, cells[j].birth, std::nullopt});
  std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return !a.death.has_value() < !b.death.has_value();
    if (a.death && b.death && *a.death != *b.death) return *a.death < *b.death;
    return false;
  });
  return bc;
}

// Rank of the inclusion-induced map from level x to level y at index n,
// computed from chain-level inclusions — independent of the reduction
// algorithm, so it serves as the barcode oracle.
template <class F>
size_t persistence_rank(const Filtration& f, const ExtOperator<F>& op, long m, size_t n,
                        const Birth& x, const Birth& y) {
  if (y < x) throw precondition_error("persistence rank needs x <= y");
  bool lower = op.variance() == Variance::lower;
  Hypergraph hx_level = f.level(x), hy_level = f.level(y);
  auto build = [&](const Hypergraph& h) {
    return lower ? constrained_complex(h, op, m) : constrained_cocomplex(h, op, m);
  };
  ConstrainedComplex<F> cx = build(hx_level), cy = build(hy_level);
  HomologySummary<F> sx = homology(cx, n), sy = homology(cy, n);
  if (sx.betti == 0 || sy.betti == 0) return 0;
  Matrix<F> incl =
      detail::inclusion_matrix<F>(detail::basis_at(cx, n), detail::basis_at(cy, n));
  return detail::induced_on_classes(sx, sy, incl).rank();
}

// Mayer-Vietoris ladders at every critical value of a pair of
// filtrations, joined level-to-level by inclusion-induced morphisms.
template <class F>
struct PersistentMVReport {
  std::vector<Birth> criticals;
  std::vector<MVLadder<F>> levels;
  std::vector<LESMorphism<F>> top_steps, bottom_steps;  // level i -> i+1
  bool all_levels_exact = true;
  bool all_squares_commute = true;
  bool all_steps_natural = true;
};

template <class F>
PersistentMVReport<F> persistent_mv(const Filtration& f1, const Filtration& f2,
                                    const ExtOperator<F>& op, long m) {
  if (!(f1.ambient == f2.ambient))
    throw precondition_error("filtrations live over different ambient vertex sets");
  PersistentMVReport<F> rep;
  std::set<Birth> crit;
  for (const Birth& x : f1.critical_values()) crit.insert(x);
  for (const Birth& x : f2.critical_values()) crit.insert(x);
  rep.criticals.assign(crit.begin(), crit.end());
  for (const Birth& x : rep.criticals) {
    MVLadder<F> ladder = mv_hypergraph(f1.level(x), f2.level(x), op, m);
    if (!verify_les(ladder.top).exact() || !verify_les(ladder.bottom).exact())
      rep.all_levels_exact = false;
    if (!ladder.squares_commute) rep.all_squares_commute = false;
    rep.levels.push_back(std::move(ladder));
  }
  for (size_t i = 0; i + 1 < rep.levels.size(); ++i) {
    const MVLadder<F>& cur = rep.levels[i];
    const MVLadder<F>& nxt = rep.levels[i + 1];
    LESMorphism<F> top = les_inclusion_morphism(cur.top, nxt.top);
    LESMorphism<F> bottom = les_inclusion_morphism(cur.bottom, nxt.bottom);
    if (!top.natural || !bottom.natural) rep.all_steps_natural = false;
    // the cube faces with the rungs must commute as well
    for (size_t k = 0; k < cur.top.nodes.size(); ++k) {
      long n = cur.top.nodes[k].index;
      if (n > nxt.top.n_max) continue;
      size_t pos = nxt.top.flat_pos(cur.top.nodes[k].role, n);
      Matrix<F> a = nxt.rungs[pos] * top.node_maps[k];
      Matrix<F> b = bottom.node_maps[k] * cur.rungs[k];
      if (!(a - b).is_zero()) rep.all_squares_commute = false;
    }
    rep.top_steps.push_back(std::move(top));
    rep.bottom_steps.push_back(std::move(bottom));
  }
  return rep;
}

}  // namespace hx
