#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"

using namespace hx;

namespace {

Chain<Rat> c1(const Hyperedge& e, long long k = 1) { return Chain<Rat>::single(e, Rat(k)); }

ExtOperator<Rat> random_op(std::mt19937& rng, Variance var, int nv, int degree) {
  ExtOperator<Rat> op(var, degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<int> verts(nv);
  for (int i = 0; i < nv; ++i) verts[i] = i;
  for (const auto& mono : monomial_basis(verts, degree)) op.add(mono, Rat(coeff(rng)));
  return op;
}

Chain<Rat> random_chain(std::mt19937& rng, int nv, int dim) {
  Chain<Rat> c(dim);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<int> verts(nv);
  for (int i = 0; i < nv; ++i) verts[i] = i;
  for (const auto& e : monomial_basis(verts, dim + 1)) c.add(e, Rat(coeff(rng)));
  return c;
}

}  // namespace

TEST_CASE("partial derivative signs") {
  CHECK(partial_derivative(0, c1({0, 1})) == c1({1}));
  CHECK(partial_derivative(1, c1({0, 1})) == c1({0}, -1));
  CHECK(partial_derivative(2, c1({0, 1})).is_zero());
  CHECK(partial_derivative(0, c1({1, 2})).is_zero());
  CHECK(partial_derivative(1, c1({1, 2})) == c1({2}));
  CHECK(partial_derivative(2, c1({1, 2})) == c1({1}, -1));
  CHECK(partial_derivative(0, c1({0, 2})) == c1({2}));
  CHECK(partial_derivative(2, c1({0, 2})) == c1({0}, -1));
  // a lone vertex has no dimension-(-1) face in the m = 0 grading
  CHECK(partial_derivative(0, c1({0})).is_zero());
}

TEST_CASE("insertion differential signs") {
  CHECK(insertion_derivative(0, c1({0})).is_zero());
  CHECK(insertion_derivative(0, c1({2})) == c1({0, 2}));
  CHECK(insertion_derivative(1, c1({0})) == c1({0, 1}, -1));
  CHECK(insertion_derivative(1, c1({2})) == c1({1, 2}));
  CHECK(insertion_derivative(2, c1({0})) == c1({0, 2}, -1));
  CHECK(insertion_derivative(2, c1({2})).is_zero());
  CHECK(insertion_derivative(0, c1({1, 2})) == c1({0, 1, 2}));
  CHECK(insertion_derivative(1, c1({0, 2})) == c1({0, 1, 2}, -1));
  CHECK(insertion_derivative(2, c1({0, 1})) == c1({0, 1, 2}));
}

TEST_CASE("wedge anticommutation and repeated generators") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Variance var = trial % 2 ? Variance::lower : Variance::upper;
    int n = 1 + trial % 3, m = 1 + (trial / 2) % 3;
    auto a = random_op(rng, var, 5, n);
    auto b = random_op(rng, var, 5, m);
    Rat sign = (n * m) % 2 == 0 ? Rat(1) : Rat(-1);
    CHECK(wedge(a, b) == wedge(b, a) * sign);
  }
  auto g = lower_gen<Rat>(2);
  CHECK(wedge(g, g).is_zero());
}

TEST_CASE("odd operators square to zero") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = trial % 2 ? 1 : 3;
    auto a = random_op(rng, Variance::lower, 5, degree);
    CHECK(wedge(a, a).is_zero());
  }
}

TEST_CASE("wedge agrees with composition of applications") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Variance var = trial % 2 ? Variance::lower : Variance::upper;
    auto a = random_op(rng, var, 5, 1 + trial % 2);
    auto b = random_op(rng, var, 5, 1 + (trial / 2) % 2);
    auto c = random_chain(rng, 5, 1 + trial % 3);
    CHECK(apply_operator(wedge(a, b), c) == apply_operator(a, apply_operator(b, c)));
  }
}

TEST_CASE("application lands on the scalar line") {
  auto g = lower_gen<Rat>(1);
  Chain<Rat> r = apply_operator(g, c1({1}));
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms.begin()->first.empty());
  CHECK(r.degree == -1);
}

TEST_CASE("codomain-checked application") {
  // d/dv1 of the top simplex leaves H2, which lacks {v0,v2}
  CHECK_THROWS_AS(apply_operator_in(lower_gen<Rat>(1), c1({0, 1, 2}), H2().edges()),
                  out_of_basis_error);
  CHECK(apply_operator_in(lower_gen<Rat>(2), c1({1, 2}), K2().edges()) == c1({1}, -1));
}

TEST_CASE("expression parser") {
  auto t = table3();
  auto sum = parse_operator<Rat>("p(v0)+p(v1)+p(v2)", t);
  CHECK(sum == full_lower_operator<Rat>(t));
  CHECK(parse_operator<Rat>("2*d(v0)", t) == upper_gen<Rat>(0, Rat(2)));
  CHECK(parse_operator<Rat>("1/2 * p(v1)", t) == lower_gen<Rat>(1, Rat::from_fraction(1, 2)));
  auto w = parse_operator<Rat>("p(v0)^p(v1)", t);
  CHECK(w == wedge(lower_gen<Rat>(0), lower_gen<Rat>(1)));
  // precedence: scalar multiplication binds tighter than wedge, wedge
  // tighter than sum
  CHECK(parse_operator<Rat>("2*p(v0)^p(v1) - p(v2)^p(v1)", t) ==
        wedge(lower_gen<Rat>(0, Rat(2)), lower_gen<Rat>(1)) -
            wedge(lower_gen<Rat>(2), lower_gen<Rat>(1)));
  CHECK(parse_operator<Rat>("p(v1)^p(v0)", t) == wedge(lower_gen<Rat>(1), lower_gen<Rat>(0)));
  CHECK_THROWS_AS(parse_operator<Rat>("p(v0)+d(v1)", t), expr_error);
  CHECK_THROWS_AS(parse_operator<Rat>("p(vX)", t), expr_error);
  CHECK_THROWS_AS(parse_operator<Rat>("p(v0", t), expr_error);
}

TEST_CASE("format round trip") {
  auto t = table3();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto op = random_op(rng, trial % 2 ? Variance::lower : Variance::upper, 3, 1 + trial % 2);
    if (op.is_zero()) continue;
    CHECK(parse_operator<Rat>(format_operator(op, t), t) == op);
  }
  CHECK(format_operator(lower_gen<Rat>(1) - lower_gen<Rat>(0), t) == "p(v1) - p(v0)" );
}

TEST_CASE("induced operator under a vertex bijection") {
  auto t = table3();
  VertexMap swap02{t, {2, 1, 0}};
  auto g0 = lower_gen<Rat>(0);
  CHECK(induced_ext_map(swap02, g0, 3) == lower_gen<Rat>(2));
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_op(rng, Variance::lower, 3, 1);
    auto b = random_op(rng, Variance::lower, 3, 1 + trial % 2);
    CHECK(induced_ext_map(swap02, wedge(a, b), 3) ==
          wedge(induced_ext_map(swap02, a, 3), induced_ext_map(swap02, b, 3)));
  }
}
