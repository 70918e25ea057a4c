#pragma once

#include <vector>

#include "hx/hx.hpp"

// Shared small inputs used across the test suite: two simplicial
// complexes, two independence hypergraphs and two general hypergraphs on
// the ordered vertex set {v0, v1, v2}.

inline hx::VertexTable table3() { return hx::VertexTable({"v0", "v1", "v2"}); }

inline hx::VertexTable table_n(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return hx::VertexTable(names);
}

inline hx::Hypergraph make_hg(const hx::VertexTable& t,
                              const std::vector<std::vector<int>>& edges) {
  hx::Hypergraph h(t);
  for (const auto& e : edges) h.insert(e);
  return h;
}

inline hx::Hypergraph K1() {
  return make_hg(table3(), {{0}, {1}, {2}, {0, 1}, {0, 2}});
}
inline hx::Hypergraph K2() {
  return make_hg(table3(), {{0}, {1}, {2}, {0, 1}, {1, 2}});
}
inline hx::Hypergraph L1() {
  return make_hg(table3(), {{0}, {0, 1}, {0, 2}, {0, 1, 2}});
}
inline hx::Hypergraph L2() {
  return make_hg(table3(), {{2}, {0, 2}, {1, 2}, {0, 1, 2}});
}
inline hx::Hypergraph H1() {
  return make_hg(table3(), {{0, 1}, {0, 2}, {0}, {1}});
}
inline hx::Hypergraph H2() {
  return make_hg(table3(), {{0, 1, 2}, {0, 1}, {2}});
}

// All hypergraphs over an n-vertex ambient set, by bitmask over the
// 2^n - 1 possible edges (n small).
inline hx::Hypergraph hypergraph_from_bits(const hx::VertexTable& t, uint64_t bits) {
  hx::Hypergraph h(t);
  uint64_t edge_count = (uint64_t{1} << t.size()) - 1;
  for (uint64_t i = 0; i < edge_count; ++i)
    if (bits & (uint64_t{1} << i)) h.insert(hx::edge_from_mask(i + 1));
  return h;
}

template <class F>
hx::ExtOperator<F> lower_gen(int v, F c = F(1)) {
  return hx::ExtOperator<F>::generator(hx::Variance::lower, v, c);
}

template <class F>
hx::ExtOperator<F> upper_gen(int v, F c = F(1)) {
  return hx::ExtOperator<F>::generator(hx::Variance::upper, v, c);
}
