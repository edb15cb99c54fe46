#include "structmat/antichain.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace structmat {

bool is_antichain(const QuotientPoset& q, Antichain d) {
  for (int a = 0; a < q.q; ++a) {
    if (!(d >> a & 1)) continue;
    for (int b = a + 1; b < q.q; ++b)
      if ((d >> b & 1) && (q.leq(a, b) || q.leq(b, a))) return false;
  }
  return true;
}

std::vector<Antichain> enumerate_antichains(const QuotientPoset& q, int class_cap,
                                            long long count_budget) {
  if (q.q > class_cap)
    throw BudgetExceeded("antichain enumeration: " + std::to_string(q.q) +
                         " classes exceeds cap " + std::to_string(class_cap));
  std::vector<Antichain> out;
  // grow by least new member; members already placed are all below `next`
  std::vector<std::pair<Antichain, int>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [d, next] = stack.back();
    stack.pop_back();
    out.push_back(d);
    if ((long long)out.size() > count_budget)
      throw BudgetExceeded("antichain enumeration exceeds budget " +
                           std::to_string(count_budget));
    for (int a = next; a < q.q; ++a) {
      bool fits = true;
      for (int b = 0; b < q.q && fits; ++b)
        if ((d >> b & 1) && (q.leq(a, b) || q.leq(b, a))) fits = false;
      if (fits) stack.emplace_back(d | (1u << a), a + 1);
    }
  }
  std::sort(out.begin(), out.end(), [](Antichain x, Antichain y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  return out;
}

bool antichain_leq(const QuotientPoset& q, Antichain d, Antichain e) {
  for (int a = 0; a < q.q; ++a) {
    if (!(d >> a & 1)) continue;
    bool dominated = false;
    for (int b = 0; b < q.q && !dominated; ++b)
      if ((e >> b & 1) && q.leq(a, b)) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

Antichain lower_set(const QuotientPoset& q, Antichain d) {
  Antichain low = 0;
  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b)
      if ((d >> b & 1) && q.leq(a, b)) {
        low |= 1u << a;
        break;
      }
  return low;
}

namespace {

Antichain maxima(const QuotientPoset& q, Antichain set) {
  Antichain out = 0;
  for (int a = 0; a < q.q; ++a) {
    if (!(set >> a & 1)) continue;
    bool maximal = true;
    for (int b = 0; b < q.q && maximal; ++b)
      if (b != a && (set >> b & 1) && q.leq(a, b)) maximal = false;
    if (maximal) out |= 1u << a;
  }
  return out;
}

}  // namespace

Antichain antichain_meet(const QuotientPoset& q, Antichain d, Antichain e) {
  return maxima(q, lower_set(q, d) & lower_set(q, e));
}

Antichain antichain_join(const QuotientPoset& q, Antichain d, Antichain e) {
  return maxima(q, d | e);
}

bool PosetAutomorphism::is_identity() const {
  for (int a = 0; a < int(map.size()); ++a)
    if (map[a] != a) return false;
  return true;
}

PosetAutomorphism identity_automorphism(int q) {
  PosetAutomorphism g;
  g.map.resize(q);
  for (int a = 0; a < q; ++a) g.map[a] = a;
  return g;
}

PosetAutomorphism compose(const PosetAutomorphism& h, const PosetAutomorphism& g) {
  PosetAutomorphism out;
  out.map.resize(g.map.size());
  for (int a = 0; a < int(g.map.size()); ++a) out.map[a] = h.map[g.map[a]];
  return out;
}

PosetAutomorphism inverse(const PosetAutomorphism& g) {
  PosetAutomorphism out;
  out.map.resize(g.map.size());
  for (int a = 0; a < int(g.map.size()); ++a) out.map[g.map[a]] = a;
  return out;
}

namespace {

void search_automorphisms(const QuotientPoset& q, bool mult_preserving, std::vector<int>& map,
                          std::vector<char>& used, int a,
                          std::vector<PosetAutomorphism>& out) {
  if (a == q.q) {
    PosetAutomorphism g;
    g.map = map;
    out.push_back(std::move(g));
    return;
  }
  for (int v = 0; v < q.q; ++v) {
    if (used[v]) continue;
    if (mult_preserving && q.mult[a] != q.mult[v]) continue;
    if (q.height[a] != q.height[v]) continue;
    bool ok = true;
    for (int b = 0; b < a && ok; ++b) {
      if (q.leq(b, a) != q.leq(map[b], v)) ok = false;
      if (q.leq(a, b) != q.leq(v, map[b])) ok = false;
    }
    if (!ok) continue;
    map[a] = v;
    used[v] = 1;
    search_automorphisms(q, mult_preserving, map, used, a + 1, out);
    used[v] = 0;
  }
}

}  // namespace

std::vector<PosetAutomorphism> poset_automorphisms(const QuotientPoset& q,
                                                   bool multiplicity_preserving) {
  std::vector<PosetAutomorphism> out;
  std::vector<int> map(q.q, -1);
  std::vector<char> used(q.q, 0);
  search_automorphisms(q, multiplicity_preserving, map, used, 0, out);
  std::sort(out.begin(), out.end(),
            [](const PosetAutomorphism& x, const PosetAutomorphism& y) { return x.map < y.map; });
  return out;
}

Antichain apply_to_antichain(const PosetAutomorphism& g, Antichain d) {
  Antichain out = 0;
  for (int a = 0; a < int(g.map.size()); ++a)
    if (d >> a & 1) out |= 1u << g.map[a];
  return out;
}

LatticeDecomposition lattice_automorphism_decompose(const QuotientPoset& q,
                                                    const std::vector<Antichain>& antichains,
                                                    const std::vector<int>& f) {
  LatticeDecomposition res;
  int m = int(antichains.size());
  if (int(f.size()) != m) {
    res.reason = "map size mismatch";
    return res;
  }
  std::vector<char> hit(m, 0);
  for (int i = 0; i < m; ++i) {
    if (f[i] < 0 || f[i] >= m || hit[f[i]]) {
      res.reason = "not a bijection";
      return res;
    }
    hit[f[i]] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (antichain_leq(q, antichains[i], antichains[j]) !=
          antichain_leq(q, antichains[f[i]], antichains[f[j]])) {
        res.reason = "order not preserved";
        res.witness = {antichains[i], antichains[j]};
        return res;
      }

  std::unordered_map<Antichain, int> index;
  for (int i = 0; i < m; ++i) index[antichains[i]] = i;

  // peel: singletons of each height level must map to singletons of the same
  // height, and that assignment is the whole automorphism
  PosetAutomorphism g;
  g.map.assign(q.q, -1);
  for (int a = 0; a < q.q; ++a) {
    Antichain image = antichains[f[index.at(1u << a)]];
    if (std::popcount(image) != 1) {
      res.reason = "singleton image not a singleton";
      res.witness = {Antichain(1u << a), image};
      return res;
    }
    int b = std::countr_zero(image);
    if (q.height[a] != q.height[b]) {
      res.reason = "height not preserved";
      res.witness = {Antichain(1u << a), image};
      return res;
    }
    g.map[a] = b;
  }
  for (int i = 0; i < m; ++i) {
    Antichain want = antichains[f[i]];
    Antichain got = apply_to_antichain(g, antichains[i]);
    if (want != got) {
      res.reason = "not induced by a vertex map";
      res.witness = {antichains[i], want};
      return res;
    }
  }
  res.ok = true;
  res.g = std::move(g);
  return res;
}

}  // namespace structmat
