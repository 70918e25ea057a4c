#pragma once

#include <map>

#include "hx/hypergraph.hpp"

namespace hx {

// Sparse chain over the hyperedge basis.  Degree -1 is the scalar line;
// its single basis element is the empty hyperedge.
template <class F>
struct Chain {
  int degree = 0;
  std::map<Hyperedge, F, EdgeOrder> terms;

  Chain() = default;
  explicit Chain(int degree_) : degree(degree_) {}

  static Chain single(const Hyperedge& e, F coeff = F(1)) {
    Chain c(edge_dim(e));
    if (!coeff.is_zero()) c.terms.emplace(e, std::move(coeff));
    return c;
  }

  bool is_zero() const { return terms.empty(); }

  void add(const Hyperedge& e, const F& coeff) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!coeff.is_zero()) terms.emplace(e, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }

  Chain operator+(const Chain& o) const {
    Chain r = *this;
    for (const auto& [e, c] : o.terms) r.add(e, c);
    return r;
  }

  Chain operator-(const Chain& o) const {
    Chain r = *this;
    for (const auto& [e, c] : o.terms) r.add(e, -c);
    return r;
  }

  Chain operator*(const F& s) const {
    Chain r(degree);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, c * s);
    return r;
  }

  bool operator==(const Chain& o) const { return terms == o.terms; }
};

}  // namespace hx
