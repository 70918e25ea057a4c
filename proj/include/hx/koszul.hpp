#pragma once

#include <map>
#include <vector>

#include "hx/complex.hpp"
#include "hx/ext_operator.hpp"
#include "hx/hypergraph.hpp"
#include "hx/matrix.hpp"

namespace hx {

// All strictly increasing k-subsets of the generator list, in
// lexicographic order.
inline std::vector<std::vector<int>> monomial_basis(const std::vector<int>& generators, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(generators.size())) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> mono(k);
    for (int i = 0; i < k; ++i) mono[i] = generators[idx[i]];
    out.push_back(std::move(mono));
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(generators.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    if (k == 0) break;
  }
  if (k == 0) out = {{}};
  return out;
}

// Matrix of the Koszul contraction delta_n(w): Ext_n -> Ext_{n-1} over the
// given generator set.  Sign convention: sum_i (-1)^{i-1} w(v_i) (omit i),
// the degree-1 map landing in the scalar line as g_v -> w(v).
template <class F>
Matrix<F> koszul_differential(const std::map<int, F>& w, const std::vector<int>& generators,
                              int n) {
  auto domain = monomial_basis(generators, n);
  auto codomain = monomial_basis(generators, n - 1);
  std::map<std::vector<int>, size_t> cod_index;
  for (size_t i = 0; i < codomain.size(); ++i) cod_index[codomain[i]] = i;
  size_t rows = n == 1 ? 1 : codomain.size();
  Matrix<F> m(rows, domain.size());
  for (size_t j = 0; j < domain.size(); ++j) {
    const auto& mono = domain[j];
    for (size_t i = 0; i < mono.size(); ++i) {
      auto it = w.find(mono[i]);
      F wi = it == w.end() ? F(0) : it->second;
      if (wi.is_zero()) continue;
      F signed_w = i % 2 == 0 ? wi : -wi;
      if (n == 1) {
        m(0, j) += signed_w;
      } else {
        std::vector<int> rest;
        rest.reserve(mono.size() - 1);
        for (size_t k = 0; k < mono.size(); ++k)
          if (k != i) rest.push_back(mono[k]);
        m(cod_index.at(rest), j) += signed_w;
      }
    }
  }
  return m;
}

// Koszul complex of H: exterior monomials over the admissible generators
// (V_H for lower variance, V^H for upper), contracted against w, ending in
// the scalar line.  An empty generator set yields the trivial complex.
template <class F>
GradedChainComplex<F> build_koszul_complex(const Hypergraph& h, const std::map<int, F>& w,
                                           Variance variance) {
  std::vector<int> gens = variance == Variance::lower ? admissible_lower_vertices(h)
                                                      : admissible_upper_vertices(h);
  GradedChainComplex<F> c;
  c.direction = Direction::descending;
  c.step = 1;
  if (gens.empty()) return c;
  ComplexNode scalar;
  scalar.degree_label = 0;
  scalar.dim = 1;
  scalar.scalar_line = true;
  c.nodes.push_back(scalar);
  for (int n = 1; n <= static_cast<int>(gens.size()); ++n) {
    ComplexNode node;
    node.degree_label = n;
    node.monomial_basis = monomial_basis(gens, n);
    node.dim = node.monomial_basis.size();
    c.nodes.push_back(node);
    c.maps.push_back(koszul_differential(w, gens, n));
  }
  if (!c.composite_is_zero())
    throw std::logic_error("Koszul differential does not square to zero");
  return c;
}

// Kernel of the outgoing differential at a node, as exterior operators.
template <class F>
std::vector<ExtOperator<F>> koszul_kernel_generators(const GradedChainComplex<F>& c, size_t node,
                                                     Variance variance) {
  std::vector<ExtOperator<F>> out;
  if (node >= c.nodes.size() || c.nodes[node].scalar_line) return out;
  Matrix<F> k = c.outgoing(node).kernel_basis();
  const auto& basis = c.nodes[node].monomial_basis;
  for (size_t j = 0; j < k.cols(); ++j) {
    ExtOperator<F> op(variance, static_cast<int>(c.nodes[node].degree_label));
    for (size_t i = 0; i < basis.size(); ++i)
      if (!k(i, j).is_zero()) op.add(basis[i], k(i, j));
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace hx
