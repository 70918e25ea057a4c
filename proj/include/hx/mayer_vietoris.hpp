#pragma once

#include <string>
#include <vector>

#include "hx/homology.hpp"

namespace hx {

enum class MVRole { intersection, direct_sum, union_set };

inline const char* mv_role_name(MVRole r) {
  switch (r) {
    case MVRole::intersection: return "intersection";
    case MVRole::direct_sum: return "direct-sum";
    default: return "union";
  }
}

namespace detail {

template <class F>
std::vector<F> chain_vec(const std::vector<Hyperedge>& basis, const Chain<F>& c) {
  std::map<Hyperedge, size_t, EdgeOrder> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<F> v(basis.size());
  for (const auto& [e, coeff] : c.terms) {
    auto it = index.find(e);
    if (it == index.end())
      throw std::logic_error("chain leaves the expected hyperedge basis");
    v[it->second] = coeff;
  }
  return v;
}

template <class F>
Chain<F> vec_chain(const std::vector<Hyperedge>& basis, const std::vector<F>& v, int degree) {
  Chain<F> c(degree);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!v[i].is_zero()) c.add(basis[i], v[i]);
  return c;
}

template <class F>
const std::vector<Hyperedge>& basis_at(const ConstrainedComplex<F>& cc, size_t n) {
  static const std::vector<Hyperedge> empty;
  return n < cc.node_count() ? cc.complex.nodes[n].edge_basis : empty;
}

// Matrix of the basis inclusion from a sub-basis into a larger basis.
template <class F>
Matrix<F> inclusion_matrix(const std::vector<Hyperedge>& sub, const std::vector<Hyperedge>& big) {
  std::map<Hyperedge, size_t, EdgeOrder> index;
  for (size_t i = 0; i < big.size(); ++i) index[big[i]] = i;
  Matrix<F> m(big.size(), sub.size());
  for (size_t j = 0; j < sub.size(); ++j) {
    auto it = index.find(sub[j]);
    if (it == index.end()) throw std::logic_error("sub-basis element missing from larger basis");
    m(it->second, j) = F(1);
  }
  return m;
}

// Induced map on homology classes from a chain-level matrix.
template <class F>
Matrix<F> induced_on_classes(const HomologySummary<F>& src, const HomologySummary<F>& dst,
                             const Matrix<F>& chain_map) {
  Matrix<F> m(dst.betti, src.betti);
  for (size_t j = 0; j < src.betti; ++j) {
    std::vector<F> img = chain_map.apply(src.representatives.column_vec(j));
    auto coords = homology_coordinates(dst, img);
    if (!coords) throw std::logic_error("map is not well defined on homology");
    for (size_t r = 0; r < dst.betti; ++r) m(r, j) = (*coords)[r];
  }
  return m;
}

}  // namespace detail

// A Mayer-Vietoris long exact sequence.  Flat node order follows the
// arrows: descending runs from the top index down to (union, 0),
// ascending from (intersection, 0) upward.
template <class F>
struct LESDiagram {
  Direction direction = Direction::descending;
  Hypergraph inter, h1, h2, uni;
  ConstrainedComplex<F> c_inter, c_h1, c_h2, c_uni;
  GradedChainComplex<F> c_sum;
  long n_max = 0;

  std::vector<HomologySummary<F>> hom_inter, hom_sum, hom_uni;
  std::vector<HomologySummary<F>> hom_h1, hom_h2;

  struct FlatNode {
    MVRole role;
    long index;
    size_t betti;
  };
  std::vector<FlatNode> nodes;
  std::vector<Matrix<F>> maps;  // maps[i]: nodes[i] -> nodes[i+1]

  // Position of (role, n) in the flat node list.
  size_t flat_pos(MVRole role, long n) const {
    int offset = role == MVRole::intersection ? 0 : role == MVRole::direct_sum ? 1 : 2;
    long block = direction == Direction::descending ? n_max - n : n;
    return static_cast<size_t>(3 * block + offset);
  }
};

struct LESVerdict {
  struct NodeDefect {
    std::string role;
    long index;
    long defect;
  };
  std::vector<NodeDefect> failures;
  bool exact() const { return failures.empty(); }
};

namespace detail {

// Direct sum of two constrained complexes (block-diagonal differentials).
template <class F>
GradedChainComplex<F> sum_complex(const ConstrainedComplex<F>& a, const ConstrainedComplex<F>& b,
                                  long n_max) {
  GradedChainComplex<F> c;
  c.direction = a.complex.direction;
  c.step = a.complex.step;
  for (long n = 0; n <= n_max; ++n) {
    ComplexNode node;
    node.degree_label = a.grading.degree_of_index(n);
    size_t da = n < static_cast<long>(a.node_count()) ? a.complex.nodes[n].dim : 0;
    size_t db = n < static_cast<long>(b.node_count()) ? b.complex.nodes[n].dim : 0;
    node.dim = da + db;
    c.nodes.push_back(node);
  }
  for (long n = 0; n + 1 <= n_max; ++n) {
    auto piece = [&](const ConstrainedComplex<F>& cc) {
      if (n + 1 < static_cast<long>(cc.node_count())) return cc.complex.maps[n];
      size_t lo = n < static_cast<long>(cc.node_count()) ? cc.complex.nodes[n].dim : 0;
      size_t hi = n + 1 < static_cast<long>(cc.node_count()) ? cc.complex.nodes[n + 1].dim : 0;
      return cc.complex.direction == Direction::descending ? Matrix<F>(lo, hi)
                                                           : Matrix<F>(hi, lo);
    };
    c.maps.push_back(Matrix<F>::block_diag(piece(a), piece(b)));
  }
  return c;
}

// Pads homology with empty summaries so every index up to n_max exists.
template <class F>
std::vector<HomologySummary<F>> homology_range(const ConstrainedComplex<F>& cc, long n_max) {
  std::vector<HomologySummary<F>> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(homology(cc, static_cast<size_t>(n)));
  return out;
}

template <class F>
std::vector<HomologySummary<F>> homology_range(const GradedChainComplex<F>& c, long n_max) {
  std::vector<HomologySummary<F>> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(homology_at(c, static_cast<size_t>(n)));
  return out;
}

}  // namespace detail

// Shared construction for both variances: the short exact sequence
// 0 -> R(H1 cap H2) -> R(H1) (+) R(H2) -> R(H1 cup H2) -> 0
// with x -> (x, x) and (a, b) -> a - b, plus connecting homomorphisms by
// lift, apply the operator, project.
template <class F>
LESDiagram<F> build_mv(const Hypergraph& h1, const Hypergraph& h2, const ExtOperator<F>& op,
                       long m, long force_n_max = -1) {
  require_same_ambient(h1, h2);
  LESDiagram<F> d;
  d.h1 = h1;
  d.h2 = h2;
  d.inter = intersect(h1, h2);
  d.uni = unite(h1, h2);
  bool lower = op.variance() == Variance::lower;
  d.direction = lower ? Direction::descending : Direction::ascending;
  auto build = [&](const Hypergraph& h) {
    return lower ? constrained_complex(h, op, m) : constrained_cocomplex(h, op, m);
  };
  d.c_uni = build(d.uni);
  d.c_h1 = build(h1);
  d.c_h2 = build(h2);
  d.c_inter = build(d.inter);
  d.n_max = static_cast<long>(d.c_uni.node_count()) - 1;
  d.n_max = std::max(d.n_max, static_cast<long>(d.c_h1.node_count()) - 1);
  d.n_max = std::max(d.n_max, static_cast<long>(d.c_h2.node_count()) - 1);
  if (d.n_max < 0) d.n_max = 0;
  if (force_n_max > d.n_max) d.n_max = force_n_max;
  d.c_sum = detail::sum_complex(d.c_h1, d.c_h2, d.n_max);

  d.hom_inter = detail::homology_range(d.c_inter, d.n_max);
  d.hom_h1 = detail::homology_range(d.c_h1, d.n_max);
  d.hom_h2 = detail::homology_range(d.c_h2, d.n_max);
  d.hom_sum = detail::homology_range(d.c_sum, d.n_max);
  d.hom_uni = detail::homology_range(d.c_uni, d.n_max);

  // chain-level matrices at each index
  std::vector<Matrix<F>> incl, diff;  // x -> (x,x) and (a,b) -> a-b
  for (long n = 0; n <= d.n_max; ++n) {
    const auto& bi = detail::basis_at(d.c_inter, n);
    const auto& b1 = detail::basis_at(d.c_h1, n);
    const auto& b2 = detail::basis_at(d.c_h2, n);
    const auto& bu = detail::basis_at(d.c_uni, n);
    Matrix<F> i1 = detail::inclusion_matrix<F>(bi, b1);
    Matrix<F> i2 = detail::inclusion_matrix<F>(bi, b2);
    incl.push_back(Matrix<F>::vconcat(i1, i2));
    Matrix<F> j1 = detail::inclusion_matrix<F>(b1, bu);
    Matrix<F> j2 = detail::inclusion_matrix<F>(b2, bu);
    for (size_t r = 0; r < j2.rows(); ++r)
      for (size_t c = 0; c < j2.cols(); ++c) j2(r, c) = -j2(r, c);
    diff.push_back(Matrix<F>::hconcat(j1, j2));
  }

  // connecting homomorphism out of (union, n)
  auto connecting = [&](long n) -> Matrix<F> {
    long target = lower ? n - 1 : n + 1;
    const HomologySummary<F>& src = d.hom_uni[n];
    if (target < 0 || target > d.n_max) return Matrix<F>(0, src.betti);
    const HomologySummary<F>& dst = d.hom_inter[target];
    const auto& b1 = detail::basis_at(d.c_h1, n);
    Matrix<F> mtx(dst.betti, src.betti);
    for (size_t j = 0; j < src.betti; ++j) {
      Chain<F> z = detail::vec_chain(detail::basis_at(d.c_uni, n),
                                     src.representatives.column_vec(j),
                                     static_cast<int>(src.degree_label));
      Chain<F> a(z.degree);
      for (const auto& [e, c] : z.terms)
        if (d.h1.contains(e)) a.add(e, c);
      Chain<F> da = apply_operator(op, a);
      // scalar-line components fall outside the node bases, matching the
      // differential's convention
      da.terms.erase(Hyperedge{});
      // the boundary of the lift lands in the intersection
      std::vector<F> v = detail::chain_vec(detail::basis_at(d.c_inter, target), da);
      auto coords = homology_coordinates(dst, v);
      if (!coords) throw std::logic_error("connecting homomorphism is not well defined");
      for (size_t r = 0; r < dst.betti; ++r) mtx(r, j) = (*coords)[r];
    }
    return mtx;
  };

  // assemble the flat sequence
  std::vector<long> order;
  if (lower)
    for (long n = d.n_max; n >= 0; --n) order.push_back(n);
  else
    for (long n = 0; n <= d.n_max; ++n) order.push_back(n);
  for (size_t k = 0; k < order.size(); ++k) {
    long n = order[k];
    d.nodes.push_back({MVRole::intersection, n, d.hom_inter[n].betti});
    d.nodes.push_back({MVRole::direct_sum, n, d.hom_sum[n].betti});
    d.nodes.push_back({MVRole::union_set, n, d.hom_uni[n].betti});
    d.maps.push_back(detail::induced_on_classes(d.hom_inter[n], d.hom_sum[n], incl[n]));
    d.maps.push_back(detail::induced_on_classes(d.hom_sum[n], d.hom_uni[n], diff[n]));
    if (k + 1 < order.size()) d.maps.push_back(connecting(n));
  }
  if (!d.nodes.empty() && d.maps.size() + 1 != d.nodes.size())
    throw std::logic_error("mismatched Mayer-Vietoris diagram shape");
  return d;
}

template <class F>
LESDiagram<F> mv_simplicial(const Hypergraph& k1, const Hypergraph& k2, const ExtOperator<F>& alpha,
                            long m) {
  if (!is_simplicial(k1) || !is_simplicial(k2))
    throw precondition_error("Mayer-Vietoris over chains needs simplicial complexes");
  return build_mv(k1, k2, alpha, m);
}

template <class F>
LESDiagram<F> mv_independence(const Hypergraph& l1, const Hypergraph& l2,
                              const ExtOperator<F>& omega, long m) {
  if (!is_independence(l1) || !is_independence(l2))
    throw precondition_error("Mayer-Vietoris over cochains needs independence hypergraphs");
  return build_mv(l1, l2, omega, m);
}

// rank(incoming) must equal nullity(outgoing) at every flat node.
template <class F>
LESVerdict verify_les(const LESDiagram<F>& d) {
  LESVerdict v;
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    size_t in_rank = i == 0 ? 0 : d.maps[i - 1].rank();
    size_t out_nullity = i < d.maps.size() ? d.maps[i].nullity() : d.nodes[i].betti;
    if (in_rank != out_nullity)
      v.failures.push_back({mv_role_name(d.nodes[i].role), d.nodes[i].index,
                            static_cast<long>(out_nullity) - static_cast<long>(in_rank)});
  }
  return v;
}

// Two Mayer-Vietoris rows joined by inclusion-induced rungs; lower
// variance pairs the largest contained simplicial complexes with the
// smallest containing ones, upper variance does the same on the
// independence side.
template <class F>
struct MVLadder {
  LESDiagram<F> top, bottom;
  std::vector<Matrix<F>> rungs;  // one per flat node, top -> bottom
  bool squares_commute = false;
};

template <class F>
MVLadder<F> mv_hypergraph(const Hypergraph& h1, const Hypergraph& h2, const ExtOperator<F>& op,
                          long m) {
  require_same_ambient(h1, h2);
  bool lower = op.variance() == Variance::lower;
  Hypergraph t1 = lower ? lower_delta(h1) : bar_lower_delta(h1);
  Hypergraph t2 = lower ? lower_delta(h2) : bar_lower_delta(h2);
  Hypergraph b1 = lower ? delta_closure(h1) : bar_delta_closure(h1);
  Hypergraph b2 = lower ? delta_closure(h2) : bar_delta_closure(h2);
  MVLadder<F> ladder;
  ladder.bottom = build_mv(b1, b2, op, m);
  ladder.top = build_mv(t1, t2, op, m, ladder.bottom.n_max);

  auto summary_of = [](const LESDiagram<F>& d, MVRole role, long n) -> const HomologySummary<F>& {
    if (role == MVRole::intersection) return d.hom_inter[n];
    if (role == MVRole::direct_sum) return d.hom_sum[n];
    return d.hom_uni[n];
  };
  // chain-level rung at (role, n): inclusion of bases
  auto rung_matrix = [&](MVRole role, long n) -> Matrix<F> {
    auto edge_basis = [&](const LESDiagram<F>& d) {
      switch (role) {
        case MVRole::intersection: return detail::basis_at(d.c_inter, n);
        case MVRole::union_set: return detail::basis_at(d.c_uni, n);
        default: return detail::basis_at(d.c_inter, n);  // unused
      }
    };
    if (role == MVRole::direct_sum) {
      Matrix<F> r1 = detail::inclusion_matrix<F>(detail::basis_at(ladder.top.c_h1, n),
                                                 detail::basis_at(ladder.bottom.c_h1, n));
      Matrix<F> r2 = detail::inclusion_matrix<F>(detail::basis_at(ladder.top.c_h2, n),
                                                 detail::basis_at(ladder.bottom.c_h2, n));
      return Matrix<F>::block_diag(r1, r2);
    }
    return detail::inclusion_matrix<F>(edge_basis(ladder.top), edge_basis(ladder.bottom));
  };

  // rungs follow the flat order of the top row; both rows share it because
  // they share direction and we induce zero maps where a node is missing
  for (const auto& node : ladder.top.nodes) {
    long n = node.index;
    const HomologySummary<F>& src = summary_of(ladder.top, node.role, n);
    if (n > ladder.bottom.n_max) {
      ladder.rungs.push_back(Matrix<F>(0, src.betti));
      continue;
    }
    const HomologySummary<F>& dst = summary_of(ladder.bottom, node.role, n);
    ladder.rungs.push_back(detail::induced_on_classes(src, dst, rung_matrix(node.role, n)));
  }

  // verify every square commutes on homology
  ladder.squares_commute = true;
  size_t shared = std::min(ladder.top.maps.size(), ladder.bottom.maps.size());
  for (size_t i = 0; i + 1 < ladder.top.nodes.size() && i < shared; ++i) {
    Matrix<F> via_bottom = ladder.bottom.maps[i] * ladder.rungs[i];
    Matrix<F> via_top = ladder.rungs[i + 1] * ladder.top.maps[i];
    if (!(via_bottom - via_top).is_zero()) ladder.squares_commute = false;
  }
  return ladder;
}

// Node-wise map between two Mayer-Vietoris rows induced by inclusions of
// the underlying hypergraph pairs (a's parts contained in b's).
template <class F>
struct LESMorphism {
  std::vector<Matrix<F>> node_maps;  // per flat node of the source row
  bool natural = true;
};

template <class F>
LESMorphism<F> les_inclusion_morphism(const LESDiagram<F>& a, const LESDiagram<F>& b) {
  LESMorphism<F> out;
  auto summary_of = [](const LESDiagram<F>& d, MVRole role, long n) -> const HomologySummary<F>& {
    if (role == MVRole::intersection) return d.hom_inter[n];
    if (role == MVRole::direct_sum) return d.hom_sum[n];
    return d.hom_uni[n];
  };
  for (const auto& node : a.nodes) {
    long n = node.index;
    const HomologySummary<F>& src = summary_of(a, node.role, n);
    if (n > b.n_max) {
      out.node_maps.push_back(Matrix<F>(0, src.betti));
      continue;
    }
    const HomologySummary<F>& dst = summary_of(b, node.role, n);
    Matrix<F> chain_level;
    switch (node.role) {
      case MVRole::intersection:
        chain_level = detail::inclusion_matrix<F>(detail::basis_at(a.c_inter, n),
                                                  detail::basis_at(b.c_inter, n));
        break;
      case MVRole::union_set:
        chain_level = detail::inclusion_matrix<F>(detail::basis_at(a.c_uni, n),
                                                  detail::basis_at(b.c_uni, n));
        break;
      case MVRole::direct_sum:
        chain_level = Matrix<F>::block_diag(
            detail::inclusion_matrix<F>(detail::basis_at(a.c_h1, n), detail::basis_at(b.c_h1, n)),
            detail::inclusion_matrix<F>(detail::basis_at(a.c_h2, n), detail::basis_at(b.c_h2, n)));
        break;
    }
    out.node_maps.push_back(detail::induced_on_classes(src, dst, chain_level));
  }
  for (size_t i = 0; i + 1 < a.nodes.size(); ++i) {
    if (a.nodes[i].index > b.n_max || a.nodes[i + 1].index > b.n_max) continue;
    size_t pos = b.flat_pos(a.nodes[i].role, a.nodes[i].index);
    if (pos >= b.maps.size()) continue;
    Matrix<F> via_b = b.maps[pos] * out.node_maps[i];
    Matrix<F> via_a = out.node_maps[i + 1] * a.maps[i];
    if (!(via_b - via_a).is_zero()) out.natural = false;
  }
  return out;
}

// Morphism of Mayer-Vietoris diagrams induced by an even-degree operator:
// the same hypergraph pair at anchor degrees m and m -/+ 2s.
template <class F>
struct MVMorphism {
  LESDiagram<F> target;
  std::vector<Matrix<F>> node_maps;  // per flat node of the source
  bool natural = false;
};

template <class F>
MVMorphism<F> mv_morphism(const LESDiagram<F>& source, const ExtOperator<F>& even_op, long m) {
  if (even_op.degree() % 2 != 0 || even_op.degree() < 0)
    throw precondition_error("morphism operator must have even non-negative degree");
  bool lower = even_op.variance() == Variance::lower;
  if ((source.direction == Direction::descending) != lower)
    throw precondition_error("morphism operator variance does not match the diagram");
  long m2 = lower ? m - even_op.degree() : m + even_op.degree();
  MVMorphism<F> out;
  out.target = build_mv(source.h1, source.h2, source.c_h1.op, m2, source.n_max);

  auto apply_matrix = [&](const std::vector<Hyperedge>& domain,
                          const std::vector<Hyperedge>& codomain) {
    return detail::op_matrix(even_op, domain, codomain);
  };
  auto summary_of = [](const LESDiagram<F>& d, MVRole role, long n) -> const HomologySummary<F>& {
    if (role == MVRole::intersection) return d.hom_inter[n];
    if (role == MVRole::direct_sum) return d.hom_sum[n];
    return d.hom_uni[n];
  };
  for (const auto& node : source.nodes) {
    long n = node.index;
    const HomologySummary<F>& src = summary_of(source, node.role, n);
    if (n > out.target.n_max) {
      out.node_maps.push_back(Matrix<F>(0, src.betti));
      continue;
    }
    const HomologySummary<F>& dst = summary_of(out.target, node.role, n);
    Matrix<F> chain_level;
    switch (node.role) {
      case MVRole::intersection:
        chain_level = apply_matrix(detail::basis_at(source.c_inter, n),
                                   detail::basis_at(out.target.c_inter, n));
        break;
      case MVRole::union_set:
        chain_level = apply_matrix(detail::basis_at(source.c_uni, n),
                                   detail::basis_at(out.target.c_uni, n));
        break;
      case MVRole::direct_sum:
        chain_level = Matrix<F>::block_diag(apply_matrix(detail::basis_at(source.c_h1, n),
                                                         detail::basis_at(out.target.c_h1, n)),
                                            apply_matrix(detail::basis_at(source.c_h2, n),
                                                         detail::basis_at(out.target.c_h2, n)));
        break;
    }
    out.node_maps.push_back(detail::induced_on_classes(src, dst, chain_level));
  }

  out.natural = true;
  // the rows may differ in length; match arrows by (role, index)
  for (size_t i = 0; i + 1 < source.nodes.size(); ++i) {
    size_t pos = out.target.flat_pos(source.nodes[i].role, source.nodes[i].index);
    if (pos >= out.target.maps.size()) continue;
    Matrix<F> a = out.target.maps[pos] * out.node_maps[i];
    Matrix<F> b = out.node_maps[i + 1] * source.maps[i];
    if (!(a - b).is_zero()) out.natural = false;
  }
  return out;
}

}  // namespace hx
