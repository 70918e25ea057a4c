#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

using namespace hx;

TEST_CASE("hypergraph parsing with header") {
  auto h = parse_hypergraph("vertices: v0 v1 v2\nv0 v1\nv0\n");
  CHECK(h.ambient().names() == std::vector<std::string>{"v0", "v1", "v2"});
  CHECK(h.size() == 2);
  CHECK(h.contains({0, 1}));
  CHECK(h.contains({0}));
}

TEST_CASE("hypergraph parsing without header uses first appearance") {
  auto h = parse_hypergraph("b a\nc\n");
  CHECK(h.ambient().names() == std::vector<std::string>{"b", "a", "c"});
  CHECK(h.contains({0, 1}));  // {b, a} sorted by table position
}

TEST_CASE("comments and blank lines") {
  auto h = parse_hypergraph("# a comment\nvertices: x y\n\nx y # trailing\n");
  CHECK(h.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_hypergraph("vertices: a b\na c\n"),
                       "line 2: undeclared vertex: c", parse_error);
  CHECK_THROWS_WITH_AS(parse_hypergraph("vertices: a a\n"),
                       "line 1: duplicate vertex in header: a", parse_error);
  CHECK_THROWS_AS(parse_hypergraph("a b a\n"), parse_error);
}

TEST_CASE("round trip") {
  for (const Hypergraph& h : {K1(), L2(), H1(), H2(), Hypergraph(table3())}) {
    CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
  }
}

TEST_CASE("serialization is canonical") {
  std::string text = serialize_hypergraph(unite(K1(), K2()));
  CHECK(text ==
        "vertices: v0 v1 v2\n"
        "v0\nv1\nv2\nv0 v1\nv0 v2\nv1 v2\n");
}

TEST_CASE("weights") {
  auto t = table3();
  auto w = parse_weights<Rat>("v0 3\nv1 5/2\n", t);
  CHECK(w.at(0) == Rat(3));
  CHECK(w.at(1) == Rat::from_fraction(5, 2));
  CHECK(w.count(2) == 0);
  CHECK_THROWS_AS(parse_weights<Rat>("vX 1\n", t), parse_error);
  CHECK_THROWS_AS(parse_weights<Rat>("v0 1/0\n", t), parse_error);
  CHECK_THROWS_AS(parse_weights<Rat>("v0\n", t), parse_error);
}

TEST_CASE("partition") {
  auto t = table3();
  std::istringstream good("v0 v2\nv1\n");
  auto blocks = parse_partition(good, t);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 2});
  CHECK(blocks[1] == std::vector<int>{1});
  std::istringstream bad("v0\nv0\n");
  CHECK_THROWS_AS(parse_partition(bad, t), parse_error);
}

TEST_CASE("fractions") {
  CHECK(parse_fraction("7", 1) == std::pair<long long, long long>{7, 1});
  CHECK(parse_fraction("-3/4", 1) == std::pair<long long, long long>{-3, 4});
  CHECK_THROWS_AS(parse_fraction("x", 1), parse_error);
}
