#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "structmat/errors.hpp"
#include "structmat/preorder.hpp"

using namespace structmat;

namespace {

// brute-force cover relation straight from the definition
std::vector<std::pair<int, int>> covers_oracle(const QuotientPoset& q) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b) {
      if (a == b || !q.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < q.q; ++c)
        if (c != a && c != b && q.leq(a, c) && q.leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Preorder random_preorder(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng() % 4 == 0) pairs.emplace_back(i, j);
  return make_preorder(n, pairs).preorder;
}

}  // namespace

TEST_CASE("closure adds missing pairs and reports the count") {
  auto r = make_preorder(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(r.was_closed);
  CHECK(r.added == 4);  // three diagonal pairs plus (0,2)
  CHECK(r.preorder.leq(0, 2));
  CHECK(r.preorder.pairs().size() == 6);

  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) all.emplace_back(i, j);
  for (int i = 1; i < 3; ++i)
    for (int j = 0; j < i; ++j) all.emplace_back(i, j);
  auto closed = make_preorder(3, all);
  CHECK(closed.was_closed);
  CHECK(closed.added == 0);
}

TEST_CASE("closure is idempotent and transitive on random input") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_preorder(rng, 5);
    for (int i = 0; i < 5; ++i) {
      CHECK(p.leq(i, i));
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k)
          if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
    }
    auto again = make_preorder(5, p.pairs());
    CHECK(again.was_closed);
  }
}

TEST_CASE("make_preorder rejects bad input") {
  CHECK_THROWS_AS(make_preorder(0, {}), InputError);
  CHECK_THROWS_WITH_AS(make_preorder(2, {{0, 5}}),
                       "pair (1,6) out of range for n=2", InputError);
}

TEST_CASE("equivalence classes come out by ascending minimum") {
  auto p = make_preorder(4, {{2, 3}, {3, 2}, {0, 1}}).preorder;
  auto cls = equivalence_classes(p);
  REQUIRE(cls.size() == 3);
  CHECK(cls[0] == std::vector<int>{0});
  CHECK(cls[1] == std::vector<int>{1});
  CHECK(cls[2] == std::vector<int>{2, 3});

  auto one = equivalence_classes(fx::full2());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<int>{0, 1});
}

TEST_CASE("quotient of the diamond") {
  auto q = quotient_order(fx::diamond());
  CHECK(q.q == 4);
  CHECK(q.n == 4);
  CHECK(q.mult == std::vector<int>{1, 1, 1, 1});
  CHECK(q.hasse == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(q.components == 1);
  CHECK(q.height == std::vector<int>{0, 0, 1, 1});
  CHECK(q.leq(0, 2));
  CHECK_FALSE(q.leq(0, 1));
  CHECK(q.strictly_less(1, 3));
  CHECK_FALSE(q.strictly_less(2, 2));
}

TEST_CASE("quotient collapses cycles to one class") {
  auto p = make_preorder(3, {{0, 1}, {1, 0}, {1, 2}}).preorder;
  auto q = quotient_order(p);
  CHECK(q.q == 2);
  CHECK(q.classes[0] == std::vector<int>{0, 1});
  CHECK(q.mult == std::vector<int>{2, 1});
  CHECK(q.class_of == std::vector<int>{0, 0, 1});
  CHECK(q.hasse == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("heights by minimal-element peeling") {
  auto q4 = quotient_order(families::chain(4));
  CHECK(q4.height == std::vector<int>{0, 1, 2, 3});

  auto qa = quotient_order(families::antichain_shape(3));
  CHECK(qa.components == 3);
  CHECK(qa.height == std::vector<int>{0, 0, 0});

  auto qt = quotient_order(fx::twopaths());
  CHECK(qt.components == 1);
  CHECK(qt.height == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("hasse matches the cover definition at random") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto q = quotient_order(random_preorder(rng, 6));
    CHECK(q.hasse == covers_oracle(q));
  }
}

TEST_CASE("family shapes") {
  CHECK(quotient_order(families::chain(1)).q == 1);
  CHECK(quotient_order(families::full(3)).q == 1);
  auto crown3 = quotient_order(families::crown(3));
  CHECK(crown3.q == 6);
  CHECK(crown3.hasse.size() == 6);
  CHECK(crown3.components == 1);
  auto aug = quotient_order(families::augmented_crown(2));
  CHECK(aug.q == 5);
  CHECK(aug.height == std::vector<int>{0, 0, 1, 1, 2});
  CHECK_THROWS_AS(families::chain(0), InputError);
  CHECK_THROWS_AS(families::crown(1), InputError);
  CHECK_THROWS_AS(families::two_paths(2, 1), InputError);
}

TEST_CASE("two_paths wiring") {
  auto p = fx::twopaths();
  CHECK(p.n == 4);
  CHECK(p.leq(0, 1));
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 3));
  CHECK(p.leq(2, 3));
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(1, 2));
  CHECK_FALSE(p.leq(2, 1));

  auto longer = families::two_paths(4, 2);
  CHECK(longer.n == 6);
  auto q = quotient_order(longer);
  CHECK(q.hasse.size() == 6);
}

TEST_CASE("text parser accepts comments and 1-based pairs") {
  auto r = parse_preorder("# diamond\nn 4\n1 3\n1 4\n2 3 # inline\n2 4\n");
  CHECK(r.preorder.rel == fx::diamond().rel);

  auto bare = parse_preorder("n 1\n");
  CHECK(bare.preorder.n == 1);
}

TEST_CASE("text parser diagnostics name the line and token") {
  CHECK_THROWS_WITH_AS(parse_preorder(""), "empty preorder input", InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("m 3\n"),
                       "line 1: expected \"n <count>\", got \"m\"", InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("n 0\n"), "line 1: bad ground set size", InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("n 3\nx 2\n"), "line 2: bad index \"x\"", InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("n 3\n1\n"), "line 2: pair needs two indices", InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("n 3\n1 2 3\n"), "line 2: trailing token \"3\"",
                       InputError);
  CHECK_THROWS_WITH_AS(parse_preorder("n 2\n1 5\n"), "pair (1,5) out of range for n=2",
                       InputError);
  CHECK_THROWS_AS(parse_preorder("# only a comment\n"), InputError);
}

TEST_CASE("json parser") {
  auto r = parse_preorder("{\"n\": 2, \"pairs\": [[1, 2]]}");
  CHECK(r.preorder.rel == fx::ut2().rel);
  CHECK(parse_preorder("{\"n\": 3}").preorder.pairs().size() == 3);
  CHECK_THROWS_AS(parse_preorder("{\"pairs\": []}"), InputError);
  CHECK_THROWS_AS(parse_preorder("{\"n\": 2, \"pairs\": [[1]]}"), InputError);
  CHECK_THROWS_AS(parse_preorder("{bad"), InputError);
}

TEST_CASE("format/parse round trip") {
  for (auto p : {fx::ut2(), fx::vee(), fx::diamond(), fx::full2(), fx::twopaths()}) {
    auto back = parse_preorder(format_preorder(p));
    CHECK(back.preorder.rel == p.rel);
  }
}

TEST_CASE("load_preorder_file reports missing files") {
  CHECK_THROWS_WITH_AS(load_preorder_file("no/such/file.txt"),
                       "cannot open preorder file \"no/such/file.txt\"", InputError);
  CHECK(load_preorder_file("data/diamond.txt").preorder.rel == fx::diamond().rel);
}

TEST_CASE("pair lists") {
  auto p = fx::vee();
  CHECK(p.pairs().size() == 5);
  CHECK(p.strict_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}
