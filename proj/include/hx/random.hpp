#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>

#include "hx/hypergraph.hpp"

namespace hx {

using Probability = boost::multiprecision::cpp_rational;
using ProbabilityFn = std::function<Probability(const Hyperedge&)>;

enum class RandomModel { bar_p, p_complex, q_independence };

inline RandomModel parse_random_model(const std::string& s) {
  if (s == "bar_p" || s == "bar-p") return RandomModel::bar_p;
  if (s == "p_complex" || s == "p-complex") return RandomModel::p_complex;
  if (s == "q_independence" || s == "q-independence") return RandomModel::q_independence;
  throw precondition_error("unknown random model '" + s + "'");
}

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based coin for edge sigma: the draw depends only on (seed, sigma),
// never on iteration order.
inline uint64_t edge_draw(uint64_t seed, const Hyperedge& e) {
  uint64_t h = splitmix64(seed);
  for (int v : e) h = splitmix64(h ^ (static_cast<uint64_t>(v) + 0x1234567ULL));
  return splitmix64(h ^ static_cast<uint64_t>(e.size()));
}

// Exact Bernoulli(p) from a uniform 64-bit draw: accept iff u/2^64 < p.
inline bool bernoulli(uint64_t u, const Probability& p) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(p);
  cpp_int den = denominator(p);
  return cpp_int(u) * den < (num << 64);
}

}  // namespace detail

// Random hypergraph: each nonempty edge over the vertex table enters
// independently with probability p(edge).  p_complex takes the largest
// simplicial complex inside a sample, q_independence the largest
// independence hypergraph.
inline Hypergraph sample_random(const VertexTable& table, const ProbabilityFn& p,
                                RandomModel model, uint64_t seed) {
  size_t n = table.size();
  if (n > 25) throw precondition_error("random sampling supports at most 25 vertices");
  Hypergraph h(table);
  uint64_t full = (n == 0) ? 0 : ((uint64_t{1} << n) - 1);
  for (uint64_t m = 1; m <= full; ++m) {
    Hyperedge e = edge_from_mask(m);
    Probability pe = p(e);
    if (pe < 0 || pe > 1) throw precondition_error("edge probability outside [0, 1]");
    if (detail::bernoulli(detail::edge_draw(seed, e), pe)) h.insert(e);
  }
  if (model == RandomModel::p_complex) return lower_delta(h);
  if (model == RandomModel::q_independence) return bar_lower_delta(h);
  return h;
}

inline Hypergraph sample_random(const VertexTable& table, const Probability& p, RandomModel model,
                                uint64_t seed) {
  return sample_random(
      table, [&](const Hyperedge&) { return p; }, model, seed);
}

}  // namespace hx
