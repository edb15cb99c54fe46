#include "structmat/graded.hpp"

#include <algorithm>
#include <numeric>

#include "structmat/errors.hpp"

namespace structmat {

namespace {

void check_tuple(const FiniteGroup& g, int n, const GradingTuple& h) {
  if (int(h.degrees.size()) != n)
    throw InputError("degree tuple length " + std::to_string(h.degrees.size()) +
                     " does not match " + std::to_string(n) + " ground indices");
  for (int d : h.degrees)
    if (d < 0 || d >= g.order()) throw InputError("degree tuple holds a bad group element");
}

void check_action(const QuotientPoset& q, const FiniteGroup& g, const ActionElement& a) {
  if (int(a.young.size()) != q.q || int(a.aut.map.size()) != q.q ||
      int(a.shifts.size()) != q.components)
    throw InputError("action element shape does not match the class poset");
  for (int c = 0; c < q.q; ++c) {
    if (int(a.young[c].size()) != q.mult[c])
      throw InputError("position permutation at class " + std::to_string(c + 1) +
                       " has the wrong size");
    std::vector<char> hit(q.mult[c], 0);
    for (int v : a.young[c]) {
      if (v < 0 || v >= q.mult[c] || hit[v])
        throw InputError("position permutation at class " + std::to_string(c + 1) +
                         " is not a permutation");
      hit[v] = 1;
    }
    if (q.mult[c] != q.mult[a.aut.map[c]])
      throw InputError("automorphism does not preserve class sizes at class " +
                       std::to_string(c + 1));
  }
  for (int s : a.shifts)
    if (s < 0 || s >= g.order()) throw InputError("shift tuple holds a bad group element");
}

}  // namespace

TransitiveLabeling grading_from_tuple(const Preorder& rho, const FiniteGroup& g,
                                      const GradingTuple& h) {
  check_tuple(g, rho.n, h);
  TransitiveLabeling u;
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j)
      if (rho.leq(i, j)) u.values[{i, j}] = g.mul(h.degrees[i], g.inv(h.degrees[j]));
  return u;
}

std::map<int, StructMatrix> graded_components(const Algebra& alg, const FiniteGroup& g,
                                              const GradingTuple& h, const StructMatrix& x) {
  auto u = grading_from_tuple(alg.rho(), g, h);
  std::map<int, StructMatrix> out;
  for (auto& [pos, val] : x.coeffs) {
    int deg = u.at(pos.first, pos.second);
    auto it = out.find(deg);
    if (it == out.end()) {
      StructMatrix z;
      z.n = alg.n();
      it = out.emplace(deg, std::move(z)).first;
    }
    it->second.coeffs[pos] = val;
  }
  return out;
}

GradingTuple suspend(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                     int component, int s, Side side) {
  check_tuple(g, q.n, h);
  if (component < 0 || component >= q.components)
    throw InputError("component index " + std::to_string(component + 1) + " out of range");
  if (s < 0 || s >= g.order()) throw InputError("shift is not a group element");
  GradingTuple out = h;
  for (int i = 0; i < q.n; ++i) {
    if (q.comp[q.class_of[i]] != component) continue;
    out.degrees[i] = side == Side::Right ? g.mul(h.degrees[i], g.inv(s))
                                         : g.mul(g.inv(s), h.degrees[i]);
  }
  return out;
}

ActionElement identity_action(const QuotientPoset& q) {
  ActionElement a;
  a.young.resize(q.q);
  for (int c = 0; c < q.q; ++c) {
    a.young[c].resize(q.mult[c]);
    std::iota(a.young[c].begin(), a.young[c].end(), 0);
  }
  a.aut = identity_automorphism(q.q);
  a.shifts.assign(q.components, 0);
  return a;
}

std::vector<int> component_permutation(const QuotientPoset& q, const PosetAutomorphism& g) {
  std::vector<int> tau(q.components, -1);
  for (int c = 0; c < q.q; ++c) {
    int from = q.comp[c], to = q.comp[g.map[c]];
    if (tau[from] >= 0 && tau[from] != to)
      throw InputError("automorphism splits a connected component");
    tau[from] = to;
  }
  return tau;
}

ActionElement action_multiply(const QuotientPoset& q, const FiniteGroup& g,
                              const ActionElement& a, const ActionElement& b) {
  check_action(q, g, a);
  check_action(q, g, b);
  ActionElement out;
  out.aut = compose(a.aut, b.aut);
  auto ainv = inverse(a.aut);
  out.young.resize(q.q);
  for (int beta = 0; beta < q.q; ++beta) {
    const auto& psi1 = a.young[beta];
    const auto& psi2 = b.young[ainv.map[beta]];
    out.young[beta].resize(q.mult[beta]);
    for (int k = 0; k < q.mult[beta]; ++k) out.young[beta][k] = psi1[psi2[k]];
  }
  auto tau_b = component_permutation(q, b.aut);
  out.shifts.resize(q.components);
  for (int t = 0; t < q.components; ++t)
    out.shifts[t] = g.mul(b.shifts[t], a.shifts[tau_b[t]]);
  return out;
}

ActionElement action_inverse(const QuotientPoset& q, const FiniteGroup& g,
                             const ActionElement& a) {
  check_action(q, g, a);
  ActionElement out;
  out.aut = inverse(a.aut);
  out.young.resize(q.q);
  for (int alpha = 0; alpha < q.q; ++alpha) {
    const auto& psi = a.young[a.aut.map[alpha]];
    out.young[alpha].resize(q.mult[alpha]);
    for (int k = 0; k < q.mult[alpha]; ++k) out.young[alpha][psi[k]] = k;
  }
  auto tau_inv = component_permutation(q, out.aut);
  out.shifts.resize(q.components);
  for (int t = 0; t < q.components; ++t) out.shifts[t] = g.inv(a.shifts[tau_inv[t]]);
  return out;
}

GradingTuple act(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                 const ActionElement& a) {
  check_tuple(g, q.n, h);
  check_action(q, g, a);
  GradingTuple out;
  out.degrees.assign(q.n, 0);
  for (int alpha = 0; alpha < q.q; ++alpha) {
    int beta = a.aut.map[alpha];
    int shift_inv = g.inv(a.shifts[q.comp[alpha]]);
    for (int k = 0; k < q.mult[alpha]; ++k) {
      int src = q.classes[beta][a.young[beta][k]];
      out.degrees[q.classes[alpha][k]] = g.mul(h.degrees[src], shift_inv);
    }
  }
  return out;
}

bool graded_flag_isomorphic(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                            const GradingTuple& hp, const PosetAutomorphism& aut,
                            const std::vector<int>* shifts) {
  check_tuple(g, q.n, h);
  check_tuple(g, q.n, hp);
  if (int(aut.map.size()) != q.q) throw InputError("automorphism does not match the class poset");
  if (shifts && int(shifts->size()) != q.components)
    throw InputError("shift tuple does not match the component count");
  for (int alpha = 0; alpha < q.q; ++alpha) {
    int beta = aut.map[alpha];
    if (q.mult[alpha] != q.mult[beta]) return false;
    int shift_inv = shifts ? g.inv((*shifts)[q.comp[alpha]]) : 0;
    std::vector<int> lhs, rhs;
    for (int i : q.classes[alpha]) lhs.push_back(hp.degrees[i]);
    for (int j : q.classes[beta]) rhs.push_back(g.mul(h.degrees[j], shift_inv));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

IsoWitness end_graded_iso(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                          const GradingTuple& hp, long long budget) {
  check_tuple(g, q.n, h);
  check_tuple(g, q.n, hp);
  auto auts = poset_automorphisms(q, true);
  long long shift_total = 1;
  for (int t = 0; t < q.components; ++t) {
    if (shift_total > budget / g.order())
      throw BudgetExceeded("isomorphism search exceeds budget " + std::to_string(budget));
    shift_total *= g.order();
  }
  if ((long long)auts.size() > budget / std::max(shift_total, 1LL))
    throw BudgetExceeded("isomorphism search exceeds budget " + std::to_string(budget));

  IsoWitness out;
  for (auto& aut : auts) {
    std::vector<int> shifts(q.components, 0);
    for (long long idx = 0; idx < shift_total; ++idx) {
      long long rest = idx;
      for (int t = 0; t < q.components; ++t) {
        shifts[t] = int(rest % g.order());
        rest /= g.order();
      }
      if (graded_flag_isomorphic(q, g, h, hp, aut, &shifts)) {
        out.iso = true;
        out.aut = aut;
        out.shifts = shifts;
        return out;
      }
    }
  }
  return out;
}

long long tuple_index(const FiniteGroup& g, const GradingTuple& h) {
  long long idx = 0;
  for (int d : h.degrees) idx = idx * g.order() + d;
  return idx;
}

GradingTuple tuple_from_index(const FiniteGroup& g, int n, long long idx) {
  GradingTuple h;
  h.degrees.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    h.degrees[i] = int(idx % g.order());
    idx /= g.order();
  }
  return h;
}

OrbitClassification classify_orbits(const QuotientPoset& q, const FiniteGroup& g,
                                    long long budget) {
  long long total = 1;
  for (int i = 0; i < q.n; ++i) {
    if (total > budget / g.order())
      throw BudgetExceeded("orbit enumeration exceeds budget " + std::to_string(budget));
    total *= g.order();
  }
  auto auts = poset_automorphisms(q, true);

  OrbitClassification out;
  out.total = total;
  out.orbit_of.assign(std::size_t(total), -1);
  for (long long start = 0; start < total; ++start) {
    if (out.orbit_of[std::size_t(start)] >= 0) continue;
    int orbit = int(out.representatives.size());
    out.representatives.push_back(tuple_from_index(g, q.n, start));
    out.orbit_of[std::size_t(start)] = orbit;
    std::vector<long long> queue{start};
    long long size = 0;
    auto push = [&](const GradingTuple& t) {
      long long idx = tuple_index(g, t);
      if (out.orbit_of[std::size_t(idx)] < 0) {
        out.orbit_of[std::size_t(idx)] = orbit;
        queue.push_back(idx);
      }
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      GradingTuple t = tuple_from_index(g, q.n, queue[head]);
      // adjacent swaps inside a class
      for (int c = 0; c < q.q; ++c)
        for (int k = 0; k + 1 < q.mult[c]; ++k) {
          GradingTuple nt = t;
          std::swap(nt.degrees[q.classes[c][k]], nt.degrees[q.classes[c][k + 1]]);
          push(nt);
        }
      // order automorphisms
      for (auto& aut : auts) {
        if (aut.is_identity()) continue;
        GradingTuple nt;
        nt.degrees.assign(q.n, 0);
        for (int alpha = 0; alpha < q.q; ++alpha) {
          int beta = aut.map[alpha];
          for (int k = 0; k < q.mult[alpha]; ++k)
            nt.degrees[q.classes[alpha][k]] = t.degrees[q.classes[beta][k]];
        }
        push(nt);
      }
      // single-component shifts
      for (int comp = 0; comp < q.components; ++comp)
        for (int s = 1; s < g.order(); ++s) push(suspend(q, g, t, comp, s, Side::Right));
    }
    out.orbit_sizes.push_back(size);
  }
  return out;
}

}  // namespace structmat
