#include "structmat/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "structmat/errors.hpp"

namespace structmat {

TransitiveCheck check_transitive(const Preorder& rho, const FiniteGroup& g,
                                 const TransitiveLabeling& u) {
  TransitiveCheck out;
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) {
      if (!rho.leq(i, j)) continue;
      auto it = u.values.find({i, j});
      if (it == u.values.end() || it->second < 0 || it->second >= g.order())
        throw InputError("labeling misses pair (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") or holds a bad element");
    }
  if (int(u.values.size()) != int(rho.pairs().size()))
    throw InputError("labeling carries values outside the relation");
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) {
      if (!rho.leq(i, j)) continue;
      for (int r = 0; r < rho.n; ++r) {
        if (!rho.leq(j, r)) continue;
        if (g.mul(u.at(i, j), u.at(j, r)) != u.at(i, r)) {
          out.witness = {i, j, r};
          return out;
        }
      }
    }
  out.ok = true;
  return out;
}

TrivialityWitness triviality_witness(const Preorder& rho, const FiniteGroup& g,
                                     const TransitiveLabeling& u) {
  TrivialityWitness out;
  int n = rho.n;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rho.leq(i, j) || rho.leq(j, i)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<int> w(n, 0);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int x : adj[v]) {
        if (seen[x]) continue;
        seen[x] = 1;
        // u(x,v) = w_x w_v^{-1} or u(v,x) = w_v w_x^{-1} on the tree edge
        if (rho.leq(x, v))
          w[x] = g.mul(u.at(x, v), w[v]);
        else
          w[x] = g.mul(g.inv(u.at(v, x)), w[v]);
        queue.push_back(x);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rho.leq(i, j) && u.at(i, j) != g.mul(w[i], g.inv(w[j]))) return out;
  out.trivial = true;
  out.weights = std::move(w);
  return out;
}

namespace {

// Products of arrow labels along directed cover paths; false when two paths
// between the same classes disagree. w is q x q with -1 where no path runs.
bool cover_products(const QuotientPoset& q, const FiniteGroup& g, const std::vector<int>& labels,
                    std::vector<int>& w) {
  w.assign(std::size_t(q.q) * q.q, -1);
  std::vector<int> order(q.q);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return q.height[a] != q.height[b] ? q.height[a] < q.height[b] : a < b;
  });
  for (int a = 0; a < q.q; ++a) {
    w[std::size_t(a) * q.q + a] = 0;
    for (int b : order) {
      for (std::size_t e = 0; e < q.hasse.size(); ++e) {
        if (q.hasse[e].second != b) continue;
        int c = q.hasse[e].first;
        int base = w[std::size_t(a) * q.q + c];
        if (base < 0) continue;
        int val = g.mul(base, labels[e]);
        int& slot = w[std::size_t(a) * q.q + b];
        if (slot < 0)
          slot = val;
        else if (slot != val)
          return false;
      }
    }
  }
  return true;
}

struct CoverForest {
  std::vector<int> parent;        // parent class, -1 at roots
  std::vector<int> parent_arrow;  // arrow to the parent, -1 at roots
  std::vector<char> is_tree;      // per arrow
};

CoverForest cover_forest(const QuotientPoset& q) {
  CoverForest f;
  f.parent.assign(q.q, -1);
  f.parent_arrow.assign(q.q, -1);
  f.is_tree.assign(q.hasse.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(q.q);  // (arrow, other end)
  for (std::size_t e = 0; e < q.hasse.size(); ++e) {
    auto [a, b] = q.hasse[e];
    adj[a].emplace_back(int(e), b);
    adj[b].emplace_back(int(e), a);
  }
  std::vector<char> seen(q.q, 0);
  for (int root = 0; root < q.q; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (auto [e, x] : adj[v]) {
        if (seen[x]) continue;
        seen[x] = 1;
        f.parent[x] = v;
        f.parent_arrow[x] = e;
        f.is_tree[e] = 1;
        queue.push_back(x);
      }
    }
  }
  return f;
}

// Walk along tree edges from x up to the root, as (vertex, arrow-to-parent).
std::vector<std::pair<int, int>> chain_to_root(const CoverForest& f, int x) {
  std::vector<std::pair<int, int>> chain;
  while (f.parent[x] >= 0) {
    chain.emplace_back(x, f.parent_arrow[x]);
    x = f.parent[x];
  }
  return chain;
}

// The fundamental cycle of a nontree arrow (a,b): the arrow forward, then the
// tree path from b back to a.
std::vector<CycleStep> cycle_walk(const QuotientPoset& q, const CoverForest& f, int arrow) {
  auto [a, b] = q.hasse[arrow];
  std::vector<CycleStep> walk{{arrow, +1}};
  auto ca = chain_to_root(f, a);
  auto cb = chain_to_root(f, b);
  while (!ca.empty() && !cb.empty() && ca.back() == cb.back()) {
    ca.pop_back();
    cb.pop_back();
  }
  auto step_dir = [&](int vertex, int e) {
    // walking from vertex toward its parent
    return q.hasse[e].first == vertex ? +1 : -1;
  };
  for (auto& [v, e] : cb) walk.push_back({e, step_dir(v, e)});
  for (auto it = ca.rbegin(); it != ca.rend(); ++it)
    walk.push_back({it->second, -step_dir(it->first, it->second)});
  return walk;
}

}  // namespace

bool path_consistent(const QuotientPoset& q, const FiniteGroup& g, const ArrowLabeling& v) {
  if (v.values.size() != q.hasse.size())
    throw InputError("arrow labeling size does not match the cover graph");
  std::vector<int> w;
  return cover_products(q, g, v.values, w);
}

std::optional<std::vector<int>> arrow_weights(const QuotientPoset& q, const FiniteGroup& g,
                                              const ArrowLabeling& v) {
  if (v.values.size() != q.hasse.size())
    throw InputError("arrow labeling size does not match the cover graph");
  auto f = cover_forest(q);
  std::vector<int> weight(q.q, 0);
  // fill in BFS discovery order: parents are always set first
  std::vector<int> order(q.q);
  std::iota(order.begin(), order.end(), 0);
  std::vector<char> done(q.q, 0);
  std::vector<int> stack;
  for (int x0 : order) {
    int x = x0;
    stack.clear();
    while (x >= 0 && !done[x]) {
      stack.push_back(x);
      x = f.parent[x];
    }
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      if (f.parent[y] < 0)
        weight[y] = 0;
      else {
        int e = f.parent_arrow[y];
        // v(e) = weight(src) weight(tgt)^{-1}
        if (q.hasse[e].first == y)
          weight[y] = g.mul(v.values[e], weight[f.parent[y]]);
        else
          weight[y] = g.mul(g.inv(v.values[e]), weight[f.parent[y]]);
      }
      done[y] = 1;
    }
  }
  for (std::size_t e = 0; e < q.hasse.size(); ++e) {
    auto [a, b] = q.hasse[e];
    if (v.values[e] != g.mul(weight[a], g.inv(weight[b]))) return std::nullopt;
  }
  return weight;
}

CycleBasis fundamental_cycles(const QuotientPoset& q) {
  auto f = cover_forest(q);
  CycleBasis out;
  for (std::size_t e = 0; e < q.hasse.size(); ++e)
    (f.is_tree[e] ? out.tree_arrows : out.nontree_arrows).push_back(int(e));
  for (int e : out.nontree_arrows) {
    std::vector<int> vec(q.hasse.size(), 0);
    for (auto& step : cycle_walk(q, f, e)) vec[step.arrow] += step.dir;
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

CycleTestResult cycle_test(const QuotientPoset& q, const FiniteGroup& g, const ArrowLabeling& v) {
  CycleTestResult out;
  if (arrow_weights(q, g, v)) {
    out.ok = true;
    return out;
  }
  auto f = cover_forest(q);
  for (std::size_t e = 0; e < q.hasse.size(); ++e) {
    if (f.is_tree[e]) continue;
    auto walk = cycle_walk(q, f, int(e));
    int prod = 0;
    for (auto& step : walk)
      prod = g.mul(prod, step.dir > 0 ? v.values[step.arrow] : g.inv(v.values[step.arrow]));
    if (prod != 0) {
      out.failing_cycle = std::move(walk);
      return out;
    }
  }
  throw std::logic_error("weights are missing but every fundamental cycle closes");
}

namespace {

struct ScanSlice {
  long long consistent = 0;
  long long trivial = 0;
  long long first_nontrivial = -1;
};

ScanSlice scan_range(const QuotientPoset& q, const FiniteGroup& g, long long lo, long long hi) {
  ScanSlice s;
  std::size_t arrows = q.hasse.size();
  std::vector<int> labels(arrows, 0);
  std::vector<int> w;
  ArrowLabeling al;
  for (long long idx = lo; idx < hi; ++idx) {
    long long rest = idx;
    for (std::size_t e = 0; e < arrows; ++e) {
      labels[e] = int(rest % g.order());
      rest /= g.order();
    }
    if (!cover_products(q, g, labels, w)) continue;
    ++s.consistent;
    al.values = labels;
    if (arrow_weights(q, g, al))
      ++s.trivial;
    else if (s.first_nontrivial < 0)
      s.first_nontrivial = idx;
  }
  return s;
}

}  // namespace

GroupTrivialityScan all_trivial_for_group(const Preorder& rho, const QuotientPoset& q,
                                          const FiniteGroup& g, long long budget, int jobs) {
  GroupTrivialityScan out;
  auto forest = cover_forest(q);
  bool is_forest =
      std::all_of(forest.is_tree.begin(), forest.is_tree.end(), [](char c) { return c != 0; });
  long long total = 1;
  bool over = false;
  for (std::size_t e = 0; e < q.hasse.size() && !over; ++e) {
    if (total > budget / g.order())
      over = true;
    else
      total *= g.order();
  }
  if (over) {
    out.verdict = is_forest ? Verdict::True : Verdict::Undecided;
    return out;
  }

  int workers = jobs < 1 ? 1 : jobs;
  if ((long long)workers > total) workers = int(total > 0 ? total : 1);
  std::vector<ScanSlice> slices(workers);
  if (workers == 1) {
    slices[0] = scan_range(q, g, 0, total);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      long long lo = t * chunk, hi = std::min(total, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { slices[t] = scan_range(q, g, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  out.consistent = 0;
  out.trivial = 0;
  long long first = -1;
  for (auto& s : slices) {
    out.consistent += s.consistent;
    out.trivial += s.trivial;
    if (s.first_nontrivial >= 0 && (first < 0 || s.first_nontrivial < first))
      first = s.first_nontrivial;
  }
  if (first < 0) {
    out.verdict = Verdict::True;
    return out;
  }
  out.verdict = Verdict::False;
  // lift the least nontrivial cover labeling to a labeling of the relation
  std::vector<int> labels(q.hasse.size(), 0);
  long long rest = first;
  for (std::size_t e = 0; e < q.hasse.size(); ++e) {
    labels[e] = int(rest % g.order());
    rest /= g.order();
  }
  std::vector<int> w;
  cover_products(q, g, labels, w);
  TransitiveLabeling u;
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) {
      if (!rho.leq(i, j)) continue;
      int a = q.class_of[i], b = q.class_of[j];
      u.values[{i, j}] = a == b ? 0 : w[std::size_t(a) * q.q + b];
    }
  out.counterexample = std::move(u);
  return out;
}

std::vector<std::vector<int>> parallel_path_differences(const QuotientPoset& q,
                                                        long long budget) {
  int arrows = int(q.hasse.size());
  std::vector<std::vector<int>> outgoing(q.q);
  for (int e = 0; e < arrows; ++e) outgoing[q.hasse[e].first].push_back(e);
  std::vector<std::vector<int>> out;
  long long paths_seen = 0;
  for (int a = 0; a < q.q; ++a) {
    std::map<int, std::vector<std::vector<int>>> by_target;
    std::vector<int> trail;
    auto dfs = [&](auto&& self, int v) -> void {
      for (int e : outgoing[v]) {
        trail.push_back(e);
        int t = q.hasse[e].second;
        if (++paths_seen > budget)
          throw BudgetExceeded("cover path enumeration exceeds budget " + std::to_string(budget));
        by_target[t].push_back(trail);
        self(self, t);
        trail.pop_back();
      }
    };
    dfs(dfs, a);
    for (auto& [t, paths] : by_target) {
      for (std::size_t k = 1; k < paths.size(); ++k) {
        std::vector<int> diff(arrows, 0);
        for (int e : paths[k]) diff[e] += 1;
        for (int e : paths[0]) diff[e] -= 1;
        out.push_back(std::move(diff));
      }
    }
  }
  return out;
}

AbelianReport all_trivial_abelian(const QuotientPoset& q, long long budget) {
  AbelianReport r;
  auto cb = fundamental_cycles(q);
  r.cycle_rank = int(cb.nontree_arrows.size());
  if (r.cycle_rank == 0) {
    r.all_trivial = true;
    return r;
  }
  auto diffs = parallel_path_differences(q, budget);
  if (diffs.empty()) {
    r.free_rank = r.cycle_rank;
    r.all_trivial = false;
    return r;
  }
  IntMatrix x(int(diffs.size()), r.cycle_rank);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) x.at(i, k) = diffs[i][cb.nontree_arrows[k]];
  auto s = smith_normal_form(x);
  r.free_rank = r.cycle_rank - s.rank;
  for (long long f : s.factors)
    if (f > 1) r.torsion.push_back(f);
  r.all_trivial = r.free_rank == 0 && r.torsion.empty();
  return r;
}

bool abelian_group_verdict(const AbelianReport& r, const FiniteGroup& g) {
  if (!g.abelian()) throw InputError("abelian verdict needs an abelian group");
  return hom_triviality(r.torsion, r.free_rank, g);
}

}  // namespace structmat
