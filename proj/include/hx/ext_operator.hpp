#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hx/chain.hpp"
#include "hx/hypergraph.hpp"

namespace hx {

enum class Variance { lower, upper };

// Homogeneous element of the exterior algebra on the generators d/dv
// (lower) or dv (upper).  Monomials are strictly increasing vertex-index
// tuples; the empty monomial is the degree-0 scalar operator.
template <class F>
class ExtOperator {
 public:
  ExtOperator() : variance_(Variance::lower), degree_(0) {}
  ExtOperator(Variance var, int degree) : variance_(var), degree_(degree) {}

  static ExtOperator scalar(Variance var, F value) {
    ExtOperator op(var, 0);
    op.add({}, std::move(value));
    return op;
  }

  static ExtOperator generator(Variance var, int vertex, F coeff = F(1)) {
    ExtOperator op(var, 1);
    op.add({vertex}, std::move(coeff));
    return op;
  }

  Variance variance() const { return variance_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, F>& terms() const { return terms_; }

  void add(const std::vector<int>& monomial, const F& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(monomial.size()) != degree_)
      throw std::invalid_argument("operator must be homogeneous");
    auto it = terms_.find(monomial);
    if (it == terms_.end()) {
      terms_.emplace(monomial, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Adds an unnormalized monomial, sorting generators with the sign of the
  // permutation; a repeated generator contributes zero.
  void add_unnormalized(std::vector<int> monomial, F coeff) {
    int sign = 1;
    for (size_t i = 1; i < monomial.size(); ++i)
      for (size_t j = i; j > 0 && monomial[j - 1] >= monomial[j]; --j) {
        if (monomial[j - 1] == monomial[j]) return;
        std::swap(monomial[j - 1], monomial[j]);
        sign = -sign;
      }
    add(monomial, sign > 0 ? coeff : -coeff);
  }

  ExtOperator operator+(const ExtOperator& o) const {
    require_same_shape(o);
    ExtOperator r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
  }

  ExtOperator operator-(const ExtOperator& o) const {
    require_same_shape(o);
    ExtOperator r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
  }

  ExtOperator operator*(const F& s) const {
    ExtOperator r(variance_, degree_);
    for (const auto& [m, c] : terms_) r.add(m, c * s);
    return r;
  }

  bool operator==(const ExtOperator& o) const {
    return variance_ == o.variance_ && terms_ == o.terms_;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [m, c] : terms_)
      for (int v : m)
        if (!std::binary_search(s.begin(), s.end(), v))
          s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
  }

 private:
  void require_same_shape(const ExtOperator& o) const {
    if (variance_ != o.variance_) throw std::invalid_argument("variance mismatch");
    if (!terms_.empty() && !o.terms_.empty() && degree_ != o.degree_)
      throw std::invalid_argument("degree mismatch");
  }

  Variance variance_;
  int degree_;
  std::map<std::vector<int>, F> terms_;
};

// Bilinear wedge; monomials concatenate and renormalize with signs.
template <class F>
ExtOperator<F> wedge(const ExtOperator<F>& a, const ExtOperator<F>& b) {
  if (a.variance() != b.variance()) throw std::invalid_argument("variance mismatch in wedge");
  ExtOperator<F> r(a.variance(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_unnormalized(std::move(m), ca * cb);
    }
  return r;
}

// d/dv action.  With keep_scalar, a 0-simplex maps to the scalar line
// (empty hyperedge, degree -1); otherwise it maps to zero.
template <class F>
Chain<F> apply_lower_generator(int v, const Chain<F>& c, bool keep_scalar = true) {
  Chain<F> r(c.degree - 1);
  if (c.degree < 0) return r;
  for (const auto& [e, coeff] : c.terms) {
    auto it = std::lower_bound(e.begin(), e.end(), v);
    if (it == e.end() || *it != v) continue;
    int pos = static_cast<int>(it - e.begin());
    Hyperedge f;
    f.reserve(e.size() - 1);
    for (int u : e)
      if (u != v) f.push_back(u);
    if (f.empty() && !keep_scalar) continue;
    r.add(f, pos % 2 == 0 ? coeff : -coeff);
  }
  return r;
}

// dv action: inserts v with sign (-1)^position, zero if v already present.
template <class F>
Chain<F> apply_upper_generator(int v, const Chain<F>& c) {
  Chain<F> r(c.degree + 1);
  if (c.degree < 0) return r;
  for (const auto& [e, coeff] : c.terms) {
    auto it = std::lower_bound(e.begin(), e.end(), v);
    if (it != e.end() && *it == v) continue;
    int pos = static_cast<int>(it - e.begin());
    Hyperedge f = e;
    f.insert(f.begin() + pos, v);
    r.add(f, pos % 2 == 0 ? coeff : -coeff);
  }
  return r;
}

// Single-generator operations on R_*(H): no scalar line.
template <class F>
Chain<F> partial_derivative(int v, const Chain<F>& c) {
  return apply_lower_generator(v, c, /*keep_scalar=*/false);
}

template <class F>
Chain<F> insertion_derivative(int v, const Chain<F>& c) {
  return apply_upper_generator(v, c);
}

// Monomial g1^g2^...^gk acts as the composition g1 o g2 o ... o gk
// (rightmost generator applied first); extended linearly.
template <class F>
Chain<F> apply_operator(const ExtOperator<F>& op, const Chain<F>& c) {
  int shift = op.variance() == Variance::lower ? -op.degree() : op.degree();
  Chain<F> out(c.degree + shift);
  for (const auto& [mono, coeff] : op.terms()) {
    Chain<F> cur = c;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it)
      cur = op.variance() == Variance::lower ? apply_lower_generator(*it, cur)
                                             : apply_upper_generator(*it, cur);
    out = out + cur * coeff;
  }
  return out;
}

struct out_of_basis_error : precondition_error {
  using precondition_error::precondition_error;
};

// Applies op and rejects results outside the supplied codomain edge set;
// an out-of-basis term signals non-admissibility of the operator.
template <class F>
Chain<F> apply_operator_in(const ExtOperator<F>& op, const Chain<F>& c, const EdgeSet& codomain) {
  Chain<F> out = apply_operator(op, c);
  for (const auto& [e, coeff] : out.terms)
    if (!codomain.count(e))
      throw out_of_basis_error("operator result leaves the restricted basis");
  return out;
}

// Relabels generators along a vertex bijection and renormalizes.
template <class F>
ExtOperator<F> induced_ext_map(const VertexMap& phi, const ExtOperator<F>& op,
                               size_t source_size) {
  if (!phi.is_bijection(source_size))
    throw std::invalid_argument("induced operator map needs a bijection");
  ExtOperator<F> r(op.variance(), op.degree());
  for (const auto& [m, c] : op.terms()) {
    std::vector<int> img;
    img.reserve(m.size());
    for (int v : m) img.push_back(phi.image[v]);
    r.add_unnormalized(std::move(img), c);
  }
  return r;
}

// --- operator expression grammar ------------------------------------------
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('^' factor)*
//   factor  := atom ('*' atom)*
//   atom    := scalar | 'p(' vertex ')' | 'd(' vertex ')'
//   scalar  := integer | integer '/' integer
//
// '*' (scalar multiplication) binds tighter than '^' (wedge), which binds
// tighter than sums.

struct expr_error : std::runtime_error {
  size_t pos;
  expr_error(size_t pos_, const std::string& msg, const std::string& input)
      : std::runtime_error(msg + "\n  " + input + "\n  " + std::string(pos_, ' ') + "^"),
        pos(pos_) {}
};

template <class F>
class ExprParser {
 public:
  ExprParser(std::string input, const VertexTable& table)
      : input_(std::move(input)), table_(table) {}

  ExtOperator<F> parse() {
    ExtOperator<F> r = parse_expr();
    skip_ws();
    if (pos_ != input_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  ExtOperator<F> parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    ExtOperator<F> acc = parse_term();
    if (neg) acc = acc * F(-1);
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      ExtOperator<F> t = parse_term();
      try {
        acc = c == '+' ? acc + t : acc - t;
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    return acc;
  }

  ExtOperator<F> parse_term() {
    ExtOperator<F> acc = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '^') break;
      ++pos_;
      ExtOperator<F> b = parse_factor();
      // a bare scalar carries no variance of its own; rebind it
      if (acc.degree() == 0 && acc.variance() != b.variance())
        acc = ExtOperator<F>::scalar(b.variance(), scalar_value(acc));
      if (b.degree() == 0 && b.variance() != acc.variance())
        b = ExtOperator<F>::scalar(acc.variance(), scalar_value(b));
      acc = wedge(acc, b);
    }
    return acc;
  }

  ExtOperator<F> parse_factor() {
    ExtOperator<F> acc = parse_atom();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      ExtOperator<F> b = parse_atom();
      // scalar multiplication only; general products are written with '^'
      if (acc.degree() == 0) {
        F s = scalar_value(acc);
        acc = b * s;
      } else if (b.degree() == 0) {
        acc = acc * scalar_value(b);
      } else {
        fail("'*' multiplies by a scalar; use '^' for wedge");
      }
    }
    return acc;
  }

  ExtOperator<F> parse_atom() {
    skip_ws();
    size_t start = pos_;
    char c = peek();
    if (c == 'p' || c == 'd') {
      ++pos_;
      if (peek() != '(') fail("expected '('");
      ++pos_;
      size_t name_start = pos_;
      while (pos_ < input_.size() && input_[pos_] != ')') ++pos_;
      if (pos_ == input_.size()) fail("unterminated generator");
      std::string name = trim(input_.substr(name_start, pos_ - name_start));
      ++pos_;
      int v = table_.find(name);
      if (v < 0) {
        pos_ = name_start;
        fail("unknown vertex: " + name);
      }
      return ExtOperator<F>::generator(c == 'p' ? Variance::lower : Variance::upper, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      long long num = read_int();
      long long den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        den = read_int();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      // a bare scalar is lower-variance by convention; it rebinds when
      // wedged or multiplied with a generator
      return ExtOperator<F>::scalar(Variance::lower, F::from_fraction(num, den));
    }
    fail("expected generator or scalar");
    return {};
  }

  static F scalar_value(const ExtOperator<F>& op) {
    F s;
    for (const auto& [m, c] : op.terms()) s = c;
    return s;
  }

  long long read_int() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && input_[start] == '-')) fail("expected integer");
    return std::stoll(input_.substr(start, pos_ - start));
  }

  static std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }

  void skip_ws() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw expr_error(pos_, msg, input_); }

  std::string input_;
  const VertexTable& table_;
  size_t pos_ = 0;
};

template <class F>
ExtOperator<F> parse_operator(const std::string& text, const VertexTable& table) {
  return ExprParser<F>(text, table).parse();
}

// Renders an operator back in the expression grammar, e.g. "p(v1) - p(v0)".
template <class F>
std::string format_operator(const ExtOperator<F>& op, const VertexTable& table) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.str();
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    std::string mono;
    for (int v : m) {
      if (!mono.empty()) mono += "^";
      mono += (op.variance() == Variance::lower ? "p(" : "d(") + table.name(v) + ")";
    }
    if (mono.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace hx
