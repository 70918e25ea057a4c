#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

using namespace hx;

TEST_CASE("model names") {
  CHECK(parse_random_model("bar-p") == RandomModel::bar_p);
  CHECK(parse_random_model("p-complex") == RandomModel::p_complex);
  CHECK(parse_random_model("q-independence") == RandomModel::q_independence);
  CHECK_THROWS_AS(parse_random_model("uniform"), precondition_error);
}

TEST_CASE("sampling is deterministic in the seed") {
  auto t = table_n(5);
  for (uint64_t seed : {0ull, 1ull, 42ull, 123456789ull}) {
    Hypergraph a = sample_random(t, Probability(1, 3), RandomModel::bar_p, seed);
    Hypergraph b = sample_random(t, Probability(1, 3), RandomModel::bar_p, seed);
    CHECK(a == b);
  }
  Hypergraph a = sample_random(t, Probability(1, 2), RandomModel::bar_p, 1);
  Hypergraph b = sample_random(t, Probability(1, 2), RandomModel::bar_p, 2);
  CHECK(a != b);  // overwhelmingly likely and frozen by the fixed seeds
}

TEST_CASE("degenerate probabilities") {
  auto t = table_n(4);
  CHECK(sample_random(t, Probability(0), RandomModel::bar_p, 7).size() == 0);
  Hypergraph all = sample_random(t, Probability(1), RandomModel::bar_p, 7);
  CHECK(all == full_complex(t));
  CHECK(sample_random(t, Probability(1), RandomModel::p_complex, 7) == full_complex(t));
  CHECK_THROWS_AS(sample_random(t, Probability(-1, 2), RandomModel::bar_p, 7),
                  precondition_error);
  CHECK_THROWS_AS(sample_random(t, Probability(3, 2), RandomModel::bar_p, 7),
                  precondition_error);
}

TEST_CASE("closed models land in their classes") {
  auto t = table_n(5);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(is_simplicial(sample_random(t, Probability(2, 5), RandomModel::p_complex, seed)));
    CHECK(is_independence(
        sample_random(t, Probability(2, 5), RandomModel::q_independence, seed)));
  }
}

TEST_CASE("closed models are the closures of the plain sample") {
  auto t = table_n(5);
  for (uint64_t seed = 100; seed < 120; ++seed) {
    Hypergraph raw = sample_random(t, Probability(1, 2), RandomModel::bar_p, seed);
    CHECK(sample_random(t, Probability(1, 2), RandomModel::p_complex, seed) ==
          lower_delta(raw));
    CHECK(sample_random(t, Probability(1, 2), RandomModel::q_independence, seed) ==
          bar_lower_delta(raw));
  }
}

TEST_CASE("per-edge probability functions") {
  auto t = table_n(4);
  // vertices always kept, everything larger never
  ProbabilityFn fn = [](const Hyperedge& e) {
    return e.size() == 1 ? Probability(1) : Probability(0);
  };
  Hypergraph h = sample_random(t, fn, RandomModel::bar_p, 3);
  CHECK(h.size() == 4);
  for (const auto& e : h.edges()) CHECK(e.size() == 1);
}

TEST_CASE("edge frequencies look like the requested probability") {
  auto t = table_n(3);
  Hyperedge e{0, 1};
  int hits = 0, trials = 2000;
  for (uint64_t seed = 0; seed < static_cast<uint64_t>(trials); ++seed)
    if (sample_random(t, Probability(1, 4), RandomModel::bar_p, seed).contains(e)) ++hits;
  // mean 500, sd about 19; a ten-sigma band keeps this deterministic test safe
  CHECK(hits > 300);
  CHECK(hits < 700);
}
