#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>

#include "fixtures.hpp"
#include "structmat/errors.hpp"
#include "structmat/grading.hpp"

using namespace structmat;

namespace {

// every G-valued function on the related pairs
std::vector<TransitiveLabeling> all_labelings(const Preorder& rho, const FiniteGroup& g) {
  auto pairs = rho.pairs();
  std::vector<TransitiveLabeling> out;
  std::vector<int> digits(pairs.size(), 0);
  for (;;) {
    TransitiveLabeling u;
    for (std::size_t k = 0; k < pairs.size(); ++k) u.values[pairs[k]] = digits[k];
    out.push_back(u);
    std::size_t k = 0;
    while (k < pairs.size() && ++digits[k] == g.order()) digits[k++] = 0;
    if (k == pairs.size()) break;
  }
  return out;
}

// oracle: try every weight vector
bool trivial_oracle(const Preorder& rho, const FiniteGroup& g, const TransitiveLabeling& u) {
  std::vector<int> w(rho.n, 0);
  for (;;) {
    bool match = true;
    for (int i = 0; i < rho.n && match; ++i)
      for (int j = 0; j < rho.n && match; ++j)
        if (rho.leq(i, j) && u.at(i, j) != g.mul(w[i], g.inv(w[j]))) match = false;
    if (match) return true;
    int k = 0;
    while (k < rho.n && ++w[k] == g.order()) w[k++] = 0;
    if (k == rho.n) return false;
  }
}

std::vector<ArrowLabeling> all_arrow_labelings(const QuotientPoset& q, const FiniteGroup& g) {
  std::vector<ArrowLabeling> out;
  std::vector<int> digits(q.hasse.size(), 0);
  for (;;) {
    out.push_back(ArrowLabeling{digits});
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == g.order()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

int cycle_product(const QuotientPoset& q, const FiniteGroup& g, const ArrowLabeling& v,
                  const std::vector<CycleStep>& steps) {
  int acc = g.id();
  for (auto& s : steps) {
    int val = v.values[std::size_t(s.arrow)];
    acc = g.mul(acc, s.dir > 0 ? val : g.inv(val));
  }
  (void)q;
  return acc;
}

}  // namespace

TEST_CASE("transitivity check") {
  auto rho = fx::cls3();
  auto z3 = FiniteGroup::cyclic(3);

  TransitiveLabeling u;
  for (auto& [i, j] : rho.pairs()) u.values[{i, j}] = 0;
  u.values[{0, 1}] = 1;
  u.values[{1, 2}] = 1;
  u.values[{0, 2}] = 2;
  CHECK(check_transitive(rho, z3, u).ok);

  u.values[{0, 2}] = 1;  // now u(0,1) u(1,2) != u(0,2)
  auto bad = check_transitive(rho, z3, u);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == std::array<int, 3>{0, 1, 2});

  u.values[{0, 2}] = 3;  // out of range element
  CHECK_THROWS_AS(check_transitive(rho, z3, u), InputError);
  u.values.erase({0, 2});
  CHECK_THROWS_AS(check_transitive(rho, z3, u), InputError);
}

TEST_CASE("diagonal entries are forced to the identity") {
  auto rho = fx::ut2();
  auto z2 = FiniteGroup::cyclic(2);
  for (auto& u : all_labelings(rho, z2)) {
    auto c = check_transitive(rho, z2, u);
    if (c.ok)
      for (int i = 0; i < rho.n; ++i) CHECK(u.at(i, i) == z2.id());
  }
}

TEST_CASE("triviality witness agrees with the exhaustive weight search") {
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);
  for (auto rho : {fx::diamond(), fx::twopaths(), fx::vee(), fx::full2()}) {
    for (auto& u : all_labelings(rho, z2)) {
      if (!check_transitive(rho, z2, u).ok) continue;
      auto w = triviality_witness(rho, z2, u);
      CHECK(w.trivial == trivial_oracle(rho, z2, u));
      if (w.trivial)
        for (int i = 0; i < rho.n; ++i)
          for (int j = 0; j < rho.n; ++j)
            if (rho.leq(i, j))
              CHECK(u.at(i, j) == z2.mul(w.weights[i], z2.inv(w.weights[j])));
    }
  }
  // a three-element chain over Z3, small enough to sweep too
  for (auto& u : all_labelings(fx::cls3(), z3)) {
    if (!check_transitive(fx::cls3(), z3, u).ok) continue;
    CHECK(triviality_witness(fx::cls3(), z3, u).trivial == trivial_oracle(fx::cls3(), z3, u));
  }
}

TEST_CASE("labelings inside one class are always induced by weights") {
  auto z2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  // one class of size two: full2; one class of size two under a point
  auto merged = make_preorder(3, {{0, 1}, {1, 0}, {0, 2}}).preorder;
  for (auto rho : {fx::full2(), merged}) {
    for (auto& u : all_labelings(rho, z2))
      if (check_transitive(rho, z2, u).ok) CHECK(triviality_witness(rho, z2, u).trivial);
  }
  for (auto& u : all_labelings(fx::full2(), s3))
    if (check_transitive(fx::full2(), s3, u).ok)
      CHECK(triviality_witness(fx::full2(), s3, u).trivial);
}

TEST_CASE("path consistency on the two-path shape") {
  auto q = quotient_order(fx::twopaths());
  REQUIRE(q.hasse == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);

  auto count = [&](const FiniteGroup& g) {
    long long consistent = 0;
    for (auto& v : all_arrow_labelings(q, g)) {
      bool want = g.mul(v.values[0], v.values[2]) == g.mul(v.values[1], v.values[3]);
      bool got = path_consistent(q, g, v);
      CHECK(got == want);
      if (got) ++consistent;
    }
    return consistent;
  };
  CHECK(count(z2) == 8);
  CHECK(count(z3) == 27);
}

TEST_CASE("arrow weights reproduce the labeling") {
  auto q = quotient_order(fx::twopaths());
  auto z3 = FiniteGroup::cyclic(3);
  long long with_weights = 0;
  for (auto& v : all_arrow_labelings(q, z3)) {
    auto w = arrow_weights(q, z3, v);
    if (!w) continue;
    ++with_weights;
    for (std::size_t e = 0; e < q.hasse.size(); ++e) {
      auto [a, b] = q.hasse[e];
      CHECK(v.values[e] == z3.mul((*w)[a], z3.inv((*w)[b])));
    }
  }
  // all consistent labelings extend here: only one independent cycle and the
  // parallel-path relation kills it
  CHECK(with_weights == 27);
  ArrowLabeling wrong{{0, 0, 0}};
  CHECK_THROWS_WITH_AS(arrow_weights(q, z3, wrong),
                       "arrow labeling size does not match the cover graph", InputError);
}

TEST_CASE("fundamental cycles close up as flows") {
  for (auto rho : {fx::diamond(), fx::twopaths(), fx::cls3(), fx::vee()}) {
    auto q = quotient_order(rho);
    auto cb = fundamental_cycles(q);
    CHECK(cb.tree_arrows.size() + cb.nontree_arrows.size() == q.hasse.size());
    CHECK(cb.vectors.size() == cb.nontree_arrows.size());
    for (std::size_t c = 0; c < cb.vectors.size(); ++c) {
      // net flow at every class is zero
      std::vector<int> net(q.q, 0);
      for (std::size_t e = 0; e < q.hasse.size(); ++e) {
        net[q.hasse[e].first] += cb.vectors[c][e];
        net[q.hasse[e].second] -= cb.vectors[c][e];
      }
      for (int a = 0; a < q.q; ++a) CHECK(net[a] == 0);
      // the nontree arrow shows up with coefficient one
      CHECK(cb.vectors[c][cb.nontree_arrows[c]] == 1);
    }
  }
  CHECK(fundamental_cycles(quotient_order(fx::diamond())).nontree_arrows.size() == 1);
  CHECK(fundamental_cycles(quotient_order(families::crown(3))).nontree_arrows.size() == 1);
  CHECK(fundamental_cycles(quotient_order(fx::cls3())).nontree_arrows.empty());
  CHECK(fundamental_cycles(quotient_order(families::augmented_crown(2))).nontree_arrows.size() ==
        2);
}

TEST_CASE("cycle test agrees with weight existence, abelian case") {
  auto q = quotient_order(fx::diamond());
  auto z2 = FiniteGroup::cyclic(2);
  long long ok_count = 0;
  for (auto& v : all_arrow_labelings(q, z2)) {
    auto r = cycle_test(q, z2, v);
    CHECK(r.ok == arrow_weights(q, z2, v).has_value());
    if (r.ok) {
      ++ok_count;
      CHECK(r.failing_cycle.empty());
    } else {
      CHECK(cycle_product(q, z2, v, r.failing_cycle) != z2.id());
    }
  }
  CHECK(ok_count == 8);
}

TEST_CASE("cycle test agrees with weight existence, nonabelian case") {
  auto q = quotient_order(families::crown(3));
  auto s3 = FiniteGroup::symmetric(3);
  long long ok_count = 0, total = 0;
  for (auto& v : all_arrow_labelings(q, s3)) {
    ++total;
    auto r = cycle_test(q, s3, v);
    bool has = arrow_weights(q, s3, v).has_value();
    CHECK(r.ok == has);
    if (!r.ok) CHECK(cycle_product(q, s3, v, r.failing_cycle) != s3.id());
    if (r.ok) ++ok_count;
  }
  CHECK(total == 46656);  // 6 arrows over S3
  CHECK(ok_count == 7776);  // one arrow bound by the closing condition
}

TEST_CASE("scan decides the two-path shape for small groups") {
  auto rho = fx::twopaths();
  auto q = quotient_order(rho);
  for (auto g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    auto scan = all_trivial_for_group(rho, q, g);
    CHECK(scan.verdict == Verdict::True);
    CHECK_FALSE(scan.counterexample.has_value());
    long long expect = 1;
    for (int k = 0; k < 3; ++k) expect *= g.order();
    CHECK(scan.consistent == expect);  // one relation eats one arrow's freedom
    CHECK(scan.trivial == expect);
  }
}

TEST_CASE("scan finds the diamond counterexample") {
  auto rho = fx::diamond();
  auto q = quotient_order(rho);
  auto z2 = FiniteGroup::cyclic(2);
  auto scan = all_trivial_for_group(rho, q, z2);
  CHECK(scan.verdict == Verdict::False);
  CHECK(scan.consistent == 16);
  CHECK(scan.trivial == 8);
  REQUIRE(scan.counterexample.has_value());
  const auto& ce = *scan.counterexample;
  CHECK(check_transitive(rho, z2, ce).ok);
  CHECK_FALSE(triviality_witness(rho, z2, ce).trivial);
  // least nontrivial labeling: first arrow carries the nonidentity element
  CHECK(ce.at(0, 2) == 1);
  CHECK(ce.at(0, 3) == 0);
  CHECK(ce.at(1, 2) == 0);
  CHECK(ce.at(1, 3) == 0);
}

TEST_CASE("scan counts equal the ground-level sweep") {
  auto rho = fx::diamond();
  auto q = quotient_order(rho);
  auto z2 = FiniteGroup::cyclic(2);
  long long transitive = 0, trivial = 0;
  for (auto& u : all_labelings(rho, z2)) {
    if (!check_transitive(rho, z2, u).ok) continue;
    ++transitive;
    if (triviality_witness(rho, z2, u).trivial) ++trivial;
  }
  auto scan = all_trivial_for_group(rho, q, z2);
  CHECK(transitive == scan.consistent);
  CHECK(trivial == scan.trivial);
}

TEST_CASE("scan reduction is sound with classes of size two") {
  // 0 and 1 merged, both under 2 and 3 (a diamond with a fat source class)
  auto rho = make_preorder(4, {{0, 1}, {1, 0}, {0, 2}, {0, 3}}).preorder;
  auto q = quotient_order(rho);
  REQUIRE(q.q == 3);
  REQUIRE(q.mult == std::vector<int>{2, 1, 1});
  auto z2 = FiniteGroup::cyclic(2);
  auto scan = all_trivial_for_group(rho, q, z2);
  CHECK(scan.verdict == Verdict::True);  // the quotient cover graph is a forest

  long long transitive = 0, trivial = 0;
  for (auto& u : all_labelings(rho, z2)) {
    if (!check_transitive(rho, z2, u).ok) continue;
    ++transitive;
    if (trivial_oracle(rho, z2, u)) ++trivial;
  }
  CHECK(transitive == trivial);  // ground truth behind the verdict
}

TEST_CASE("forest covers short-circuit even out of budget") {
  auto rho = fx::cls3();
  auto q = quotient_order(rho);
  auto s3 = FiniteGroup::symmetric(3);
  auto scan = all_trivial_for_group(rho, q, s3, 1);
  CHECK(scan.verdict == Verdict::True);
  CHECK(scan.consistent == -1);  // not counted under the tiny budget
  CHECK(scan.trivial == -1);
}

TEST_CASE("cyclic covers go undecided out of budget") {
  auto rho = families::crown(3);
  auto q = quotient_order(rho);
  auto s3 = FiniteGroup::symmetric(3);
  auto scan = all_trivial_for_group(rho, q, s3, 1000);
  CHECK(scan.verdict == Verdict::Undecided);
  CHECK(scan.consistent == -1);
  CHECK_FALSE(scan.counterexample.has_value());
}

TEST_CASE("parallel scan is deterministic") {
  auto rho = fx::diamond();
  auto q = quotient_order(rho);
  auto z3 = FiniteGroup::cyclic(3);
  auto one = all_trivial_for_group(rho, q, z3, 1'000'000, 1);
  for (int jobs : {2, 3, 7}) {
    auto many = all_trivial_for_group(rho, q, z3, 1'000'000, jobs);
    CHECK(many.verdict == one.verdict);
    CHECK(many.consistent == one.consistent);
    CHECK(many.trivial == one.trivial);
    REQUIRE(many.counterexample.has_value());
    CHECK(many.counterexample->values == one.counterexample->values);
  }
  CHECK(one.consistent == 81);
  CHECK(one.trivial == 27);
}

TEST_CASE("abelian obstruction on the named shapes") {
  auto tp = all_trivial_abelian(quotient_order(fx::twopaths()));
  CHECK(tp.all_trivial);
  CHECK(tp.cycle_rank == 1);
  CHECK(tp.free_rank == 0);
  CHECK(tp.torsion.empty());

  auto dm = all_trivial_abelian(quotient_order(fx::diamond()));
  CHECK_FALSE(dm.all_trivial);
  CHECK(dm.cycle_rank == 1);
  CHECK(dm.free_rank == 1);
  CHECK(dm.torsion.empty());

  auto cr = all_trivial_abelian(quotient_order(families::crown(3)));
  CHECK_FALSE(cr.all_trivial);
  CHECK(cr.free_rank == 1);

  auto ac = all_trivial_abelian(quotient_order(families::augmented_crown(2)));
  CHECK(ac.all_trivial);
  CHECK(ac.cycle_rank == 2);
  CHECK(ac.free_rank == 0);

  auto ch = all_trivial_abelian(quotient_order(fx::cls3()));
  CHECK(ch.all_trivial);
  CHECK(ch.cycle_rank == 0);
}

TEST_CASE("abelian verdicts match exhaustive scans") {
  std::vector<Preorder> shapes = {fx::diamond(), fx::twopaths(), families::crown(3),
                                  families::augmented_crown(2), fx::cls3(), fx::vee()};
  std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                     FiniteGroup::cyclic(4)};
  for (auto& rho : shapes) {
    auto q = quotient_order(rho);
    auto report = all_trivial_abelian(q);
    for (auto& g : groups) {
      auto scan = all_trivial_for_group(rho, q, g, 2'000'000);
      REQUIRE(scan.verdict != Verdict::Undecided);
      CHECK(abelian_group_verdict(report, g) == (scan.verdict == Verdict::True));
    }
  }
  CHECK_THROWS_WITH_AS(
      abelian_group_verdict(all_trivial_abelian(quotient_order(fx::diamond())),
                            FiniteGroup::symmetric(3)),
      "abelian verdict needs an abelian group", InputError);
}

TEST_CASE("trivial groups make everything trivial") {
  auto z1 = FiniteGroup::cyclic(1);
  auto q = quotient_order(fx::diamond());
  auto scan = all_trivial_for_group(fx::diamond(), q, z1);
  CHECK(scan.verdict == Verdict::True);
  CHECK(scan.consistent == 1);
  CHECK(scan.trivial == 1);
  CHECK(abelian_group_verdict(all_trivial_abelian(q), z1));
}

TEST_CASE("parallel path differences") {
  auto tp = parallel_path_differences(quotient_order(fx::twopaths()));
  REQUIRE(tp.size() == 1);
  // one relation: second path minus first, signs on all four arrows
  std::vector<int> abs_sum(4, 0);
  for (auto v : tp[0]) CHECK((v == 1 || v == -1));
  CHECK(tp[0].size() == 4);
  (void)abs_sum;

  CHECK(parallel_path_differences(quotient_order(fx::diamond())).empty());
  CHECK(parallel_path_differences(quotient_order(families::crown(3))).empty());
  CHECK(parallel_path_differences(quotient_order(families::augmented_crown(2))).size() == 2);
  CHECK_THROWS_AS(parallel_path_differences(quotient_order(families::augmented_crown(3)), 2),
                  BudgetExceeded);
}

TEST_CASE("augmented crown: scans confirm the collapsed obstruction") {
  auto rho = families::augmented_crown(2);
  auto q = quotient_order(rho);
  for (auto g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
    auto scan = all_trivial_for_group(rho, q, g, 5'000'000);
    CHECK(scan.verdict == Verdict::True);
  }
}
