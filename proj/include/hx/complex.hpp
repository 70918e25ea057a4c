#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hx/matrix.hpp"
#include "hx/hypergraph.hpp"

namespace hx {

enum class Direction { descending, ascending };

// One graded piece: either a hyperedge basis, an exterior-monomial basis,
// or the scalar line (dim 1, no listed basis).
struct ComplexNode {
  long degree_label = 0;
  size_t dim = 0;
  std::vector<Hyperedge> edge_basis;           // constrained complexes
  std::vector<std::vector<int>> monomial_basis;  // Koszul complexes
  bool scalar_line = false;
};

// Chain of finite free modules with differentials between consecutive
// nodes.  maps[i] connects nodes i and i+1: descending means
// maps[i]: node[i+1] -> node[i], ascending means maps[i]: node[i] -> node[i+1].
template <class F>
struct GradedChainComplex {
  Direction direction = Direction::descending;
  int step = 1;
  std::vector<ComplexNode> nodes;
  std::vector<Matrix<F>> maps;

  size_t size() const { return nodes.size(); }

  // Differential out of node n (towards the end the complex runs to).
  Matrix<F> outgoing(size_t n) const {
    if (direction == Direction::descending)
      return n == 0 ? Matrix<F>(0, nodes[0].dim) : maps[n - 1];
    return n + 1 < nodes.size() ? maps[n] : Matrix<F>(0, nodes[n].dim);
  }

  // Differential into node n.
  Matrix<F> incoming(size_t n) const {
    if (direction == Direction::descending)
      return n + 1 < nodes.size() ? maps[n] : Matrix<F>(nodes[n].dim, 0);
    return n == 0 ? Matrix<F>(nodes[0].dim, 0) : maps[n - 1];
  }

  bool composite_is_zero() const {
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
      const Matrix<F>& a = direction == Direction::descending ? maps[i] : maps[i + 1];
      const Matrix<F>& b = direction == Direction::descending ? maps[i + 1] : maps[i];
      if (a.cols() != b.rows()) return false;
      if (!(a * b).is_zero()) return false;
    }
    return true;
  }
};

struct NodeExactness {
  long degree_label;
  size_t defect;  // nullity(outgoing) - rank(incoming)
  bool exact() const { return defect == 0; }
};

struct ExactnessReport {
  std::vector<NodeExactness> nodes;
  bool all_exact() const {
    for (const auto& n : nodes)
      if (!n.exact()) return false;
    return true;
  }
};

template <class F>
ExactnessReport check_exactness(const GradedChainComplex<F>& c) {
  if (!c.composite_is_zero())
    throw std::logic_error("composite of consecutive differentials is nonzero");
  ExactnessReport rep;
  for (size_t n = 0; n < c.nodes.size(); ++n) {
    size_t nullity = c.outgoing(n).nullity();
    size_t rank = c.incoming(n).rank();
    rep.nodes.push_back({c.nodes[n].degree_label, nullity - rank});
  }
  return rep;
}

}  // namespace hx
