#include "structmat/report.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "structmat/algebra.hpp"
#include "structmat/antichain.hpp"
#include "structmat/graded.hpp"
#include "structmat/grading.hpp"
#include "structmat/group.hpp"
#include "structmat/preorder.hpp"

namespace structmat {

namespace {

using nlohmann::ordered_json;

struct Loaded {
  ClosureResult closure;
  QuotientPoset q;
};

Loaded load(const JobSpec& spec) {
  if (spec.preorder.empty()) throw InputError("missing --preorder");
  ClosureResult c;
  if (spec.preorder == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    c = parse_preorder(ss.str());
  } else {
    c = load_preorder_file(spec.preorder);
  }
  return {c, quotient_order(c.preorder)};
}

FiniteGroup need_group(const JobSpec& spec) {
  if (spec.group.empty()) throw InputError("missing --group");
  return parse_group_spec(spec.group);
}

PrimeField need_field(const JobSpec& spec) {
  if (!spec.field) throw InputError("missing --field");
  return PrimeField(*spec.field);
}

std::string class_set(const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members[k] + 1);
  }
  return s + "}";
}

std::string mask_set(Antichain d) {
  std::string s = "{";
  bool first = true;
  for (int b = 0; b < 32; ++b)
    if (d >> b & 1) {
      if (!first) s += ",";
      s += std::to_string(b + 1);
      first = false;
    }
  return s + "}";
}

std::vector<int> mask_list(Antichain d) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b)
    if (d >> b & 1) out.push_back(b + 1);
  return out;
}

std::string tuple_str(const FiniteGroup& g, const GradingTuple& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.degrees.size(); ++i) {
    if (i) s += ",";
    s += g.label(h.degrees[i]);
  }
  return s + ")";
}

std::string strict_values(const Preorder& rho, const ScalarTransitive& a) {
  std::string s;
  for (auto& [i, j] : rho.strict_pairs()) {
    if (!s.empty()) s += " ";
    s += std::to_string(a.at(i, j));
  }
  return s.empty() ? "(none)" : s;
}

void cmd_analyze(const JobSpec& spec, std::ostringstream& t, ordered_json& j) {
  auto l = load(spec);
  const auto& q = l.q;
  t << "preorder: n=" << q.n << ", related pairs: " << l.closure.preorder.pairs().size();
  if (l.closure.was_closed)
    t << " (input closed)\n";
  else
    t << " (closure added " << l.closure.added << ")\n";
  t << "classes (" << q.q << "):";
  for (auto& c : q.classes) t << " " << class_set(c);
  t << "\nclass order:";
  bool any = false;
  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b)
      if (q.strictly_less(a, b)) {
        t << " " << a + 1 << "<" << b + 1;
        any = true;
      }
  if (!any) t << " (none)";
  t << "\nhasse arrows:";
  if (q.hasse.empty()) t << " (none)";
  for (auto& [a, b] : q.hasse) t << " " << a + 1 << "->" << b + 1;
  t << "\ncomponents: " << q.components << "\nheights:";
  for (int h : q.height) t << " " << h;
  auto anti = enumerate_antichains(q, kDefaultClassCap, spec.budget);
  auto aut = poset_automorphisms(q, false);
  auto aut0 = poset_automorphisms(q, true);
  t << "\nantichains: " << anti.size() << "\n";
  t << "order automorphisms: " << aut.size() << "\n";
  t << "size-preserving automorphisms: " << aut0.size() << "\n";

  j["n"] = q.n;
  j["pairs"] = l.closure.preorder.pairs().size();
  j["closure_added"] = l.closure.added;
  ordered_json cl = ordered_json::array();
  for (auto& c : q.classes) {
    ordered_json one = ordered_json::array();
    for (int i : c) one.push_back(i + 1);
    cl.push_back(one);
  }
  j["classes"] = cl;
  ordered_json ord = ordered_json::array();
  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b)
      if (q.strictly_less(a, b)) ord.push_back({a + 1, b + 1});
  j["class_order"] = ord;
  ordered_json ha = ordered_json::array();
  for (auto& [a, b] : q.hasse) ha.push_back({a + 1, b + 1});
  j["hasse"] = ha;
  j["components"] = q.components;
  j["heights"] = q.height;
  j["antichains"] = anti.size();
  j["aut"] = aut.size();
  j["aut0"] = aut0.size();
}

void cmd_lattice(const JobSpec& spec, std::ostringstream& t, ordered_json& j) {
  auto l = load(spec);
  const auto& q = l.q;
  auto anti = enumerate_antichains(q, kDefaultClassCap, spec.budget);
  t << "antichains (" << anti.size() << "):\n";
  for (std::size_t k = 0; k < anti.size(); ++k)
    t << "  " << k << ": " << mask_set(anti[k]) << "\n";
  const std::size_t table_cap = 16;
  bool tables = anti.size() <= table_cap;
  std::vector<int> index(1u << q.q, -1);
  for (std::size_t k = 0; k < anti.size(); ++k) index[anti[k]] = int(k);
  ordered_json prows = ordered_json::array();
  for (auto& a : anti) prows.push_back(mask_list(a));
  j["antichains"] = prows;
  j["tables_included"] = tables;
  if (tables) {
    ordered_json meet_j = ordered_json::array(), join_j = ordered_json::array();
    t << "meet table:\n";
    for (auto& a : anti) {
      ordered_json row = ordered_json::array();
      t << " ";
      for (auto& b : anti) {
        int idx = index[antichain_meet(q, a, b)];
        t << " " << idx;
        row.push_back(idx);
      }
      t << "\n";
      meet_j.push_back(row);
    }
    t << "join table:\n";
    for (auto& a : anti) {
      ordered_json row = ordered_json::array();
      t << " ";
      for (auto& b : anti) {
        int idx = index[antichain_join(q, a, b)];
        t << " " << idx;
        row.push_back(idx);
      }
      t << "\n";
      join_j.push_back(row);
    }
    j["meet"] = meet_j;
    j["join"] = join_j;
  } else {
    t << "tables skipped (" << anti.size() << " antichains > " << table_cap << ")\n";
  }
}

void cmd_aut(const JobSpec& spec, std::ostringstream& t, ordered_json& j) {
  auto l = load(spec);
  const auto& q = l.q;
  PrimeField f = need_field(spec);
  Algebra alg(l.closure.preorder, f);
  auto scal = alg.enumerate_scalars(spec.budget);
  auto aut0 = poset_automorphisms(q, true);
  BigNat units = alg.unit_group_order();
  BigNat kern = alg.diagonal_kernel_order();
  BigNat order = alg.automorphism_group_order(aut0.size(), BigNat::from_u64(scal.size()));

  t << "field: F_" << f.p() << "\n";
  t << "scalar systems |T|: " << scal.size() << "\n";
  t << "unit group |U|: " << units.to_string() << "\n";
  t << "diagonal kernel |D|: " << kern.to_string() << "\n";
  t << "size-preserving automorphisms |Aut0|: " << aut0.size() << "\n";
  t << "automorphism group order |U|*|Aut0|*|T|/|D|: " << order.to_string() << "\n";

  // seeded spot check that realization turns triple products into composites
  std::mt19937_64 rng(spec.seed);
  auto random_triple = [&]() {
    AutoTriple tr;
    tr.g = aut0[rng() % aut0.size()];
    tr.scal = scal[rng() % scal.size()];
    for (int tries = 0; tries < 1000; ++tries) {
      StructMatrix m;
      m.n = alg.n();
      for (auto& pos : alg.basis_pairs()) {
        int v = int(rng() % f.p());
        if (v != 0) m.coeffs[pos] = v;
      }
      if (alg.invert(m)) {
        tr.mat = std::move(m);
        return tr;
      }
    }
    tr.mat = alg.identity();
    return tr;
  };
  int sample_pairs = 10;
  bool law_ok = true;
  for (int s = 0; s < sample_pairs && law_ok; ++s) {
    AutoTriple t1 = random_triple(), t2 = random_triple();
    auto lhs = alg.realize(alg.triple_multiply(t1, t2));
    auto rhs = alg.compose(alg.realize(t1), alg.realize(t2));
    law_ok = lhs == rhs;
  }
  t << "product law sample (" << sample_pairs << " pairs, seed " << spec.seed
    << "): " << (law_ok ? "ok" : "MISMATCH") << "\n";

  auto forest = alg.default_forest();
  t << "default forest:";
  if (forest.empty()) t << " (empty)";
  for (auto& [a, b] : forest) t << " " << a + 1 << "-" << b + 1;
  auto norm = alg.normalized_scalars(forest, spec.budget);
  t << "\nnormalized residual systems: " << norm.size() << "\n";

  const ScalarTransitive& sample = scal.back();
  auto split = alg.scalar_split(sample, forest);
  ScalarTransitive recomposed;
  for (auto& [pos, val] : split.residual.values)
    recomposed.values[pos] =
        f.mul(f.mul(split.d[pos.first], f.inv(split.d[pos.second])), val);
  bool split_ok = recomposed == sample && alg.residual_normalized(split.residual, forest);
  t << "split demo: a[strict] = " << strict_values(l.closure.preorder, sample) << "; d =";
  for (int v : split.d) t << " " << v;
  t << "; residual[strict] = " << strict_values(l.closure.preorder, split.residual)
    << "; recomposed: " << (split_ok ? "ok" : "MISMATCH") << "\n";

  j["field"] = f.p();
  j["scalar_systems"] = scal.size();
  j["unit_group"] = units.to_string();
  j["diagonal_kernel"] = kern.to_string();
  j["aut0"] = aut0.size();
  j["automorphism_order"] = order.to_string();
  j["product_law"] = {{"pairs", sample_pairs}, {"seed", spec.seed}, {"ok", law_ok}};
  ordered_json fj = ordered_json::array();
  for (auto& [a, b] : forest) fj.push_back({a + 1, b + 1});
  j["default_forest"] = fj;
  j["normalized_residual_systems"] = norm.size();
  ordered_json dj = ordered_json::array();
  for (int v : split.d) dj.push_back(v);
  j["split_demo"] = {{"d", dj}, {"ok", split_ok}};
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    default:
      return "undecided";
  }
}

void cmd_triviality(const JobSpec& spec, std::ostringstream& t, ordered_json& j, int& status) {
  auto l = load(spec);
  const auto& q = l.q;
  FiniteGroup g = need_group(spec);
  auto cb = fundamental_cycles(q);
  bool forest = cb.nontree_arrows.empty();
  auto scan = all_trivial_for_group(l.closure.preorder, q, g, spec.budget, spec.jobs);
  auto ab = all_trivial_abelian(q, spec.budget);

  t << "group: " << g.name() << " (order " << g.order() << ", "
    << (g.abelian() ? "abelian" : "nonabelian") << ")\n";
  t << "cover arrows: " << q.hasse.size() << ", cycle rank: " << cb.nontree_arrows.size()
    << ", forest: " << (forest ? "yes" : "no") << "\n";
  t << "verdict: " << verdict_str(scan.verdict) << "\n";
  if (scan.consistent >= 0)
    t << "consistent labelings: " << scan.consistent << ", trivial: " << scan.trivial << "\n";
  if (scan.counterexample) {
    t << "counterexample:";
    for (auto& [pos, val] : scan.counterexample->values)
      if (pos.first != pos.second)
        t << " u(" << pos.first + 1 << "," << pos.second + 1 << ")=" << g.label(val);
    t << "\n";
  }
  t << "abelian obstruction: free rank " << ab.free_rank << ", invariant factors:";
  if (ab.torsion.empty()) t << " (none)";
  for (long long v : ab.torsion) t << " " << v;
  t << ", all-abelian verdict: " << (ab.all_trivial ? "true" : "false") << "\n";
  if (g.abelian()) {
    bool ov = abelian_group_verdict(ab, g);
    t << "obstruction verdict for " << g.name() << ": " << (ov ? "true" : "false") << "\n";
  }

  j["group"] = g.name();
  j["group_order"] = g.order();
  j["abelian_group"] = g.abelian();
  j["cover_arrows"] = q.hasse.size();
  j["cycle_rank"] = cb.nontree_arrows.size();
  j["forest"] = forest;
  j["verdict"] = verdict_str(scan.verdict);
  j["consistent"] = scan.consistent;
  j["trivial"] = scan.trivial;
  if (scan.counterexample) {
    ordered_json ce = ordered_json::array();
    for (auto& [pos, val] : scan.counterexample->values)
      if (pos.first != pos.second)
        ce.push_back({pos.first + 1, pos.second + 1, g.label(val)});
    j["counterexample"] = ce;
  }
  j["abelian"] = {{"all_trivial", ab.all_trivial},
                  {"cycle_rank", ab.cycle_rank},
                  {"free_rank", ab.free_rank},
                  {"torsion", ab.torsion}};
  if (g.abelian()) j["obstruction_verdict"] = abelian_group_verdict(ab, g);
  if (scan.verdict == Verdict::Undecided) status = 2;
}

void cmd_classify(const JobSpec& spec, std::ostringstream& t, ordered_json& j) {
  auto l = load(spec);
  const auto& q = l.q;
  FiniteGroup g = need_group(spec);
  auto res = classify_orbits(q, g, spec.budget);

  t << "group: " << g.name() << ", tuples: " << res.total << "\n";
  t << "orbits: " << res.representatives.size() << "\n";
  for (std::size_t k = 0; k < res.representatives.size(); ++k)
    t << "orbit " << k + 1 << ": size " << res.orbit_sizes[k] << ", representative "
      << tuple_str(g, res.representatives[k]) << "\n";

  std::string cross = "skipped";
  if (res.total <= 1000 && res.total * res.total <= spec.budget) {
    cross = "ok";
    for (long long a = 0; a < res.total && cross == "ok"; ++a)
      for (long long b = a + 1; b < res.total && cross == "ok"; ++b) {
        bool same = res.orbit_of[std::size_t(a)] == res.orbit_of[std::size_t(b)];
        bool iso = end_graded_iso(q, g, tuple_from_index(g, q.n, a),
                                  tuple_from_index(g, q.n, b), spec.budget)
                       .iso;
        if (same != iso) cross = "mismatch";
      }
  }
  t << "pairwise isomorphism cross-check: " << cross << "\n";

  j["group"] = g.name();
  j["tuples"] = res.total;
  j["orbits"] = res.representatives.size();
  ordered_json arr = ordered_json::array();
  for (std::size_t k = 0; k < res.representatives.size(); ++k) {
    ordered_json one;
    one["size"] = res.orbit_sizes[k];
    ordered_json degrees = ordered_json::array();
    for (int d : res.representatives[k].degrees) degrees.push_back(g.label(d));
    one["representative"] = degrees;
    arr.push_back(one);
  }
  j["orbit_list"] = arr;
  j["cross_check"] = cross;
}

void cmd_oracle(const JobSpec& spec, std::ostringstream& t, ordered_json& j) {
  auto l = load(spec);
  const auto& q = l.q;
  bool any_bad = false;
  ordered_json suites = ordered_json::array();

  // stable subspaces over F_2 against antichains
  {
    ordered_json s;
    s["name"] = "subspaces";
    if (q.n <= 5) {
      try {
        auto subs = stable_subspaces_f2(l.closure.preorder);
        auto anti = enumerate_antichains(q, kDefaultClassCap, spec.budget);
        std::vector<std::uint32_t> expected;
        for (auto d : anti) expected.push_back(antichain_subspace_mask_f2(q, d));
        std::sort(expected.begin(), expected.end());
        bool agree = subs == expected;
        t << "subspace suite (F_2): antichains " << anti.size() << ", stable subspaces "
          << subs.size() << ", masks match: " << (agree ? "yes" : "NO") << "\n";
        s["status"] = agree ? "agree" : "disagree";
        s["antichains"] = anti.size();
        s["subspaces"] = subs.size();
        any_bad |= !agree;
      } catch (const BudgetExceeded&) {
        t << "subspace suite: skipped (budget)\n";
        s["status"] = "skipped";
      }
    } else {
      t << "subspace suite: skipped (n > 5)\n";
      s["status"] = "skipped";
    }
    suites.push_back(s);
  }

  // lattice automorphisms by exhaustive bijections
  {
    ordered_json s;
    s["name"] = "lattice";
    try {
      auto anti = enumerate_antichains(q, kDefaultClassCap, spec.budget);
      long long fact = 1;
      bool over = false;
      for (std::size_t k = 2; k <= anti.size() && !over; ++k) {
        if (fact > spec.budget / (long long)k)
          over = true;
        else
          fact *= (long long)k;
      }
      if (over) {
        t << "lattice suite: skipped (budget, " << anti.size() << "! bijections)\n";
        s["status"] = "skipped";
      } else {
        int m = int(anti.size());
        std::vector<int> perm(m);
        for (int k = 0; k < m; ++k) perm[k] = k;
        long long valid = 0, decomposed = 0;
        do {
          bool ok = true;
          for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b) {
              bool lhs = antichain_leq(q, anti[a], anti[b]);
              bool rhs = antichain_leq(q, anti[perm[a]], anti[perm[b]]);
              if (lhs != rhs) ok = false;
            }
          if (ok) {
            ++valid;
            auto dec = lattice_automorphism_decompose(q, anti, perm);
            if (dec.ok) ++decomposed;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto aut = poset_automorphisms(q, false);
        bool agree = valid == (long long)aut.size() && decomposed == valid;
        t << "lattice suite: bijections " << fact << ", order-preserving " << valid
          << ", expected " << aut.size() << ", decomposed " << decomposed << ": "
          << (agree ? "agree" : "DISAGREE") << "\n";
        s["status"] = agree ? "agree" : "disagree";
        s["bijections"] = fact;
        s["order_preserving"] = valid;
        s["expected"] = aut.size();
        s["decomposed"] = decomposed;
        any_bad |= !agree;
      }
    } catch (const BudgetExceeded&) {
      t << "lattice suite: skipped (budget)\n";
      s["status"] = "skipped";
    }
    suites.push_back(s);
  }

  // exhaustive algebra automorphism count against the order formula
  {
    ordered_json s;
    s["name"] = "automorphisms";
    if (spec.field) {
      try {
        PrimeField f = need_field(spec);
        Algebra alg(l.closure.preorder, f);
        long long brute = count_algebra_automorphisms_bruteforce(alg, spec.budget);
        auto scal = alg.enumerate_scalars(spec.budget);
        auto aut0 = poset_automorphisms(q, true);
        BigNat formula = alg.automorphism_group_order(aut0.size(), BigNat::from_u64(scal.size()));
        bool agree = formula.to_string() == std::to_string(brute);
        t << "automorphism suite (F_" << f.p() << "): brute force " << brute << ", formula "
          << formula.to_string() << ": " << (agree ? "agree" : "DISAGREE") << "\n";
        s["status"] = agree ? "agree" : "disagree";
        s["brute_force"] = brute;
        s["formula"] = formula.to_string();
        any_bad |= !agree;
      } catch (const BudgetExceeded&) {
        t << "automorphism suite: skipped (budget)\n";
        s["status"] = "skipped";
      }
    } else {
      t << "automorphism suite: skipped (no --field)\n";
      s["status"] = "skipped";
    }
    suites.push_back(s);
  }

  t << "overall: " << (any_bad ? "DISAGREE" : "agree") << "\n";
  j["suites"] = suites;
  j["overall"] = any_bad ? "disagree" : "agree";
}

}  // namespace

RunResult run_command(const JobSpec& spec) {
  RunResult r;
  std::ostringstream t;
  try {
    if (spec.budget < 1) throw InputError("budget must be positive");
    if (spec.jobs < 1) throw InputError("jobs must be positive");
    if (spec.format != "text" && spec.format != "json")
      throw InputError("unknown format '" + spec.format + "'");
    r.json["schema"] = 1;
    r.json["command"] = spec.command;
    if (spec.command == "analyze")
      cmd_analyze(spec, t, r.json);
    else if (spec.command == "lattice")
      cmd_lattice(spec, t, r.json);
    else if (spec.command == "aut")
      cmd_aut(spec, t, r.json);
    else if (spec.command == "triviality")
      cmd_triviality(spec, t, r.json, r.status);
    else if (spec.command == "classify")
      cmd_classify(spec, t, r.json);
    else if (spec.command == "oracle")
      cmd_oracle(spec, t, r.json);
    else
      throw InputError("unknown command '" + spec.command + "'");
    r.text = t.str();
  } catch (const BudgetExceeded& e) {
    r.status = 2;
    r.json = ordered_json();
    r.json["schema"] = 1;
    r.json["command"] = spec.command;
    r.json["verdict"] = "undecided";
    r.json["reason"] = e.what();
    r.text = std::string("verdict: undecided (") + e.what() + ")\n";
  } catch (const std::exception& e) {
    r.status = 1;
    r.json = ordered_json();
    r.json["schema"] = 1;
    r.json["error"] = e.what();
    r.text = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

std::string emit_report(const RunResult& r, const std::string& format) {
  if (format == "json") return r.json.dump(2) + "\n";
  return r.text;
}

}  // namespace structmat
