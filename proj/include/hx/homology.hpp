#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hx/chain.hpp"
#include "hx/complex.hpp"
#include "hx/ext_operator.hpp"
#include "hx/hypergraph.hpp"
#include "hx/matrix.hpp"

namespace hx {

// Degree bookkeeping for a step-(2t+1) complex anchored at m:
// m = lambda*(2t+1) + q with 0 <= q <= 2t.
struct ConstrainedGrading {
  int t = 0;
  long m = 0;
  long lambda = 0;
  int q = 0;

  ConstrainedGrading() = default;
  ConstrainedGrading(int op_degree, long m_) {
    if (op_degree < 1 || op_degree % 2 == 0)
      throw precondition_error("constraining operator must have odd positive degree");
    t = (op_degree - 1) / 2;
    m = m_;
    int d = op_degree;
    q = static_cast<int>(((m % d) + d) % d);
    lambda = (m - q) / d;
  }

  int step() const { return 2 * t + 1; }
  long degree_of_index(long n) const { return m + n * step(); }
};

template <class F>
struct ConstrainedComplex {
  Hypergraph source;
  ExtOperator<F> op;
  ConstrainedGrading grading;
  GradedChainComplex<F> complex;

  size_t node_count() const { return complex.nodes.size(); }
};

namespace detail {

// Matrix of op between two hyperedge bases.  Terms on the scalar line are
// dropped (the degree -1 module is zero here); any other term outside the
// codomain basis is a construction bug.
template <class F>
Matrix<F> op_matrix(const ExtOperator<F>& op, const std::vector<Hyperedge>& domain,
                    const std::vector<Hyperedge>& codomain) {
  std::map<Hyperedge, size_t, EdgeOrder> index;
  for (size_t i = 0; i < codomain.size(); ++i) index[codomain[i]] = i;
  Matrix<F> m(codomain.size(), domain.size());
  for (size_t j = 0; j < domain.size(); ++j) {
    Chain<F> image = apply_operator(op, Chain<F>::single(domain[j]));
    for (const auto& [e, c] : image.terms) {
      if (e.empty()) continue;
      auto it = index.find(e);
      if (it == index.end())
        throw std::logic_error("operator image leaves the codomain basis");
      m(it->second, j) = c;
    }
  }
  return m;
}

template <class F>
void require_admissible(const Hypergraph& h, const ExtOperator<F>& op) {
  std::vector<int> adm = op.variance() == Variance::lower ? admissible_lower_vertices(h)
                                                          : admissible_upper_vertices(h);
  for (int v : op.support())
    if (!std::binary_search(adm.begin(), adm.end(), v))
      throw precondition_error("operator vertex '" + h.ambient().name(v) +
                               "' is not admissible for this hypergraph");
}

}  // namespace detail

// Chain complex R_*(K, alpha, m): node n carries the hyperedges of K of
// dimension m + n(2t+1); alpha lowers the node index by one.
template <class F>
ConstrainedComplex<F> constrained_complex(const Hypergraph& k, const ExtOperator<F>& alpha,
                                          long m) {
  if (alpha.variance() != Variance::lower)
    throw precondition_error("constrained chain complex needs a lower-variance operator");
  ConstrainedGrading grading(alpha.degree(), m);
  detail::require_admissible(k, alpha);

  ConstrainedComplex<F> cc{k, alpha, grading, {}};
  cc.complex.direction = Direction::descending;
  cc.complex.step = grading.step();
  long top = k.max_dim();
  long n_max = 0;
  while (grading.degree_of_index(n_max + 1) <= top) ++n_max;
  for (long n = 0; n <= n_max; ++n) {
    ComplexNode node;
    node.degree_label = grading.degree_of_index(n);
    if (node.degree_label >= 0) node.edge_basis = k.edges_of_dim(static_cast<int>(node.degree_label));
    node.dim = node.edge_basis.size();
    cc.complex.nodes.push_back(std::move(node));
    if (n > 0)
      cc.complex.maps.push_back(detail::op_matrix(alpha, cc.complex.nodes[n].edge_basis,
                                                  cc.complex.nodes[n - 1].edge_basis));
  }
  if (!cc.complex.composite_is_zero())
    throw std::logic_error("constrained differential does not square to zero");
  return cc;
}

// Cochain complex R^*(L, omega, m): ascending, omega raises the node index.
template <class F>
ConstrainedComplex<F> constrained_cocomplex(const Hypergraph& l, const ExtOperator<F>& omega,
                                            long m) {
  if (omega.variance() != Variance::upper)
    throw precondition_error("constrained cochain complex needs an upper-variance operator");
  ConstrainedGrading grading(omega.degree(), m);
  detail::require_admissible(l, omega);

  ConstrainedComplex<F> cc{l, omega, grading, {}};
  cc.complex.direction = Direction::ascending;
  cc.complex.step = grading.step();
  long top = l.max_dim();
  long n_max = 0;
  while (grading.degree_of_index(n_max + 1) <= top) ++n_max;
  for (long n = 0; n <= n_max; ++n) {
    ComplexNode node;
    node.degree_label = grading.degree_of_index(n);
    if (node.degree_label >= 0) node.edge_basis = l.edges_of_dim(static_cast<int>(node.degree_label));
    node.dim = node.edge_basis.size();
    cc.complex.nodes.push_back(std::move(node));
    if (n > 0)
      cc.complex.maps.push_back(detail::op_matrix(omega, cc.complex.nodes[n - 1].edge_basis,
                                                  cc.complex.nodes[n].edge_basis));
  }
  if (!cc.complex.composite_is_zero())
    throw std::logic_error("constrained codifferential does not square to zero");
  return cc;
}

template <class F>
struct HomologySummary {
  long index = 0;
  long degree_label = 0;
  size_t betti = 0;
  Matrix<F> kernel;        // cycles, node coordinates
  Matrix<F> image;         // boundaries, reduced column echelon
  Matrix<F> representatives;  // one column per homology class
  std::vector<Hyperedge> basis;

  std::vector<Chain<F>> representative_chains() const {
    std::vector<Chain<F>> out;
    for (size_t j = 0; j < representatives.cols(); ++j) {
      Chain<F> c(basis.empty() ? 0 : edge_dim(basis.front()));
      for (size_t i = 0; i < basis.size(); ++i)
        if (!representatives(i, j).is_zero()) c.add(basis[i], representatives(i, j));
      out.push_back(std::move(c));
    }
    return out;
  }
};

// Homology at node n: ker(outgoing)/im(incoming), with deterministic
// echelon bases and image-reduced representatives.
template <class F>
HomologySummary<F> homology_at(const GradedChainComplex<F>& c, size_t n) {
  HomologySummary<F> s;
  s.index = static_cast<long>(n);
  if (n >= c.nodes.size()) {
    if (!c.nodes.empty())
      s.degree_label = c.nodes.back().degree_label +
                       (static_cast<long>(n) - static_cast<long>(c.nodes.size()) + 1) * c.step;
    return s;
  }
  s.degree_label = c.nodes[n].degree_label;
  s.basis = c.nodes[n].edge_basis;
  s.kernel = c.outgoing(n).kernel_basis();
  s.image = c.incoming(n).column_space_basis();
  // pick kernel columns that extend the image to a homology basis
  Matrix<F> probe = s.image;
  std::vector<size_t> chosen;
  size_t rank = probe.rank();
  for (size_t j = 0; j < s.kernel.cols(); ++j) {
    Matrix<F> trial = Matrix<F>::hconcat(probe, s.kernel.column(j));
    size_t r = trial.rank();
    if (r > rank) {
      chosen.push_back(j);
      probe = trial;
      rank = r;
    }
  }
  s.betti = chosen.size();
  Matrix<F> reps(c.nodes[n].dim, chosen.size());
  for (size_t k = 0; k < chosen.size(); ++k) {
    std::vector<F> v = s.kernel.column_vec(chosen[k]);
    for (size_t i = 0; i < v.size(); ++i) reps(i, k) = v[i];
  }
  s.representatives = reps;
  return s;
}

template <class F>
HomologySummary<F> homology(const ConstrainedComplex<F>& cc, size_t n) {
  return homology_at(cc.complex, n);
}

// Coordinates of a cycle in the homology basis of `s`; empty optional if
// the vector is not a cycle-plus-boundary combination.
template <class F>
std::optional<std::vector<F>> homology_coordinates(const HomologySummary<F>& s,
                                                   const std::vector<F>& v) {
  Matrix<F> span = Matrix<F>::hconcat(s.image, s.representatives);
  auto x = span.solve(v);
  if (!x) return std::nullopt;
  std::vector<F> coords(x->begin() + s.image.cols(), x->end());
  return coords;
}

// Usual simplicial homology: alpha = sum of all d/dv, m = 0.
template <class F>
ExtOperator<F> full_lower_operator(const VertexTable& table) {
  ExtOperator<F> op(Variance::lower, 1);
  for (int v = 0; v < static_cast<int>(table.size()); ++v) op.add({v}, F(1));
  return op;
}

template <class F>
ExtOperator<F> full_upper_operator(const VertexTable& table) {
  ExtOperator<F> op(Variance::upper, 1);
  for (int v = 0; v < static_cast<int>(table.size()); ++v) op.add({v}, F(1));
  return op;
}

template <class F>
HomologySummary<F> usual_homology(const Hypergraph& k, size_t n) {
  if (!is_simplicial(k)) throw precondition_error("usual homology needs a simplicial complex");
  return homology(constrained_complex(k, full_lower_operator<F>(k.ambient()), 0), n);
}

// Localized weighted operator: sum over the support of w(v) d/dv (or dv).
template <class F>
ExtOperator<F> localized_operator(const std::map<int, F>& w, const std::vector<int>& support,
                                  Variance variance) {
  ExtOperator<F> op(variance, 1);
  for (int v : support) {
    auto it = w.find(v);
    if (it != w.end() && !it->second.is_zero()) op.add({v}, it->second);
  }
  return op;
}

// Matrix of sum_{v in support} w(v) d/dv from dimension n to n-1 of K.
template <class F>
Matrix<F> weighted_boundary_matrix(const Hypergraph& k, const std::map<int, F>& w, int n,
                                   const std::vector<int>& support) {
  if (!is_simplicial(k)) throw precondition_error("weighted boundary needs a simplicial complex");
  return detail::op_matrix(localized_operator(w, support, Variance::lower), k.edges_of_dim(n),
                           k.edges_of_dim(n - 1));
}

// Matrix of sum_{v in support} w(v) dv from dimension n to n+1 of L.
template <class F>
Matrix<F> weighted_coboundary_matrix(const Hypergraph& l, const std::map<int, F>& w, int n,
                                     const std::vector<int>& support) {
  if (!is_independence(l))
    throw precondition_error("weighted coboundary needs an independence hypergraph");
  return detail::op_matrix(localized_operator(w, support, Variance::upper), l.edges_of_dim(n),
                           l.edges_of_dim(n + 1));
}

// H_n(K, w, V_i): kernel of the localized boundary modulo the image of the
// next localized boundary, computed through the constrained complex.
template <class F>
HomologySummary<F> localized_homology(const Hypergraph& k, const std::map<int, F>& w,
                                      const std::vector<int>& part, size_t n) {
  auto cc = constrained_complex(k, localized_operator(w, part, Variance::lower), 0);
  return homology(cc, n);
}

template <class F>
HomologySummary<F> localized_cohomology(const Hypergraph& l, const std::map<int, F>& w,
                                        const std::vector<int>& part, size_t n) {
  auto cc = constrained_cocomplex(l, localized_operator(w, part, Variance::upper), 0);
  return homology(cc, n);
}

// A chain map between two constrained complexes, one matrix per node.
template <class F>
struct ChainMap {
  std::vector<Matrix<F>> node_maps;
};

// Sorts vertex images and reports the permutation sign; zero on collisions.
inline std::pair<Hyperedge, int> sort_with_sign(std::vector<int> verts) {
  int sign = 1;
  for (size_t i = 1; i < verts.size(); ++i)
    for (size_t j = i; j > 0 && verts[j - 1] >= verts[j]; --j) {
      if (verts[j - 1] == verts[j]) return {{}, 0};
      std::swap(verts[j - 1], verts[j]);
      sign = -sign;
    }
  return {verts, sign};
}

namespace detail {

template <class F>
Matrix<F> edge_map_matrix(const std::vector<Hyperedge>& domain,
                          const std::vector<Hyperedge>& codomain,
                          const std::function<Chain<F>(const Hyperedge&)>& f) {
  std::map<Hyperedge, size_t, EdgeOrder> index;
  for (size_t i = 0; i < codomain.size(); ++i) index[codomain[i]] = i;
  Matrix<F> m(codomain.size(), domain.size());
  for (size_t j = 0; j < domain.size(); ++j) {
    Chain<F> img = f(domain[j]);
    for (const auto& [e, c] : img.terms) {
      auto it = index.find(e);
      if (it == index.end()) throw precondition_error("chain map leaves the codomain basis");
      m(it->second, j) = c;
    }
  }
  return m;
}

}  // namespace detail

// Builds the per-node matrices of an edge-level map and verifies the
// chain-map identity against both differentials.
template <class F>
ChainMap<F> make_chain_map(const ConstrainedComplex<F>& src, const ConstrainedComplex<F>& dst,
                           const std::function<Chain<F>(const Hyperedge&)>& f) {
  ChainMap<F> cm;
  size_t n = std::min(src.node_count(), dst.node_count());
  for (size_t i = 0; i < n; ++i)
    cm.node_maps.push_back(
        detail::edge_map_matrix<F>(src.complex.nodes[i].edge_basis,
                                   dst.complex.nodes[i].edge_basis, f));
  // nodes beyond dst's range must map to zero
  for (size_t i = n; i < src.node_count(); ++i) {
    if (!src.complex.nodes[i].edge_basis.empty()) {
      for (const auto& e : src.complex.nodes[i].edge_basis)
        if (!f(e).is_zero()) throw precondition_error("chain map leaves the codomain complex");
    }
    cm.node_maps.push_back(Matrix<F>(0, src.complex.nodes[i].dim));
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    bool desc = src.complex.direction == Direction::descending;
    const Matrix<F>& d_src = src.complex.maps[i];
    const Matrix<F>& d_dst = dst.complex.maps[i];
    Matrix<F> lhs = desc ? cm.node_maps[i] * d_src : cm.node_maps[i + 1] * d_src;
    Matrix<F> rhs = desc ? d_dst * cm.node_maps[i + 1] : d_dst * cm.node_maps[i];
    if (!(lhs - rhs).is_zero())
      throw precondition_error("supplied map fails the chain-map identity");
  }
  return cm;
}

// Inclusion chain map between complexes of nested hypergraphs.
template <class F>
ChainMap<F> inclusion_chain_map(const ConstrainedComplex<F>& src,
                                const ConstrainedComplex<F>& dst) {
  return make_chain_map<F>(src, dst,
                           [](const Hyperedge& e) { return Chain<F>::single(e); });
}

// Chain map applying an even-degree operator beta: R(K,alpha,m) -> R(K,alpha,m').
template <class F>
ChainMap<F> operator_chain_map(const ConstrainedComplex<F>& src,
                               const ConstrainedComplex<F>& dst, const ExtOperator<F>& even_op) {
  if (even_op.degree() % 2 != 0)
    throw precondition_error("induced operator must have even degree");
  return make_chain_map<F>(src, dst, [&](const Hyperedge& e) {
    return apply_operator(even_op, Chain<F>::single(e));
  });
}

// Chain map induced by a vertex bijection (with permutation signs).
template <class F>
ChainMap<F> bijection_chain_map(const ConstrainedComplex<F>& src,
                                const ConstrainedComplex<F>& dst, const VertexMap& phi) {
  if (!phi.is_bijection(src.source.ambient().size()))
    throw precondition_error("vertex map must be a bijection");
  return make_chain_map<F>(src, dst, [&](const Hyperedge& e) {
    std::vector<int> img;
    img.reserve(e.size());
    for (int v : e) img.push_back(phi.image[v]);
    auto [sorted, sign] = sort_with_sign(std::move(img));
    Chain<F> c(edge_dim(e));
    if (sign != 0) c.add(sorted, F(sign));
    return c;
  });
}

// Matrices of the induced map on homology at every node index.
template <class F>
std::vector<Matrix<F>> induced_map_on_homology(const ConstrainedComplex<F>& src,
                                               const ConstrainedComplex<F>& dst,
                                               const ChainMap<F>& cm) {
  std::vector<Matrix<F>> out;
  size_t n = std::max(src.node_count(), dst.node_count());
  for (size_t i = 0; i < n; ++i) {
    HomologySummary<F> hs = homology(src, i);
    HomologySummary<F> hd = homology(dst, i);
    Matrix<F> m(hd.betti, hs.betti);
    for (size_t j = 0; j < hs.betti; ++j) {
      std::vector<F> cycle = hs.representatives.column_vec(j);
      std::vector<F> image =
          i < cm.node_maps.size() ? cm.node_maps[i].apply(cycle) : std::vector<F>(hd.basis.size());
      if (image.size() != (i < dst.node_count() ? dst.complex.nodes[i].dim : 0))
        image.resize(i < dst.node_count() ? dst.complex.nodes[i].dim : 0);
      auto coords = homology_coordinates(hd, image);
      if (!coords) throw std::logic_error("induced map is not well defined on homology");
      for (size_t r = 0; r < hd.betti; ++r) m(r, j) = (*coords)[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hx
