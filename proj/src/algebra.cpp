#include "structmat/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace structmat {

Algebra::Algebra(Preorder rho, PrimeField field)
    : rho_(std::move(rho)), poset_(quotient_order(rho_)), field_(field) {
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j)
      if (rho_.leq(i, j)) pairs_.emplace_back(i, j);
  below_.resize(rho_.n);
  above_.resize(rho_.n);
  for (auto& [i, j] : pairs_) {
    below_[j].push_back(i);
    above_[i].push_back(j);
  }
}

StructMatrix Algebra::zero() const {
  StructMatrix x;
  x.n = rho_.n;
  return x;
}

StructMatrix Algebra::identity() const {
  StructMatrix x = zero();
  for (int i = 0; i < rho_.n; ++i) x.coeffs[{i, i}] = 1;
  return x;
}

StructMatrix Algebra::unit(int i, int j) const {
  if (i < 0 || i >= rho_.n || j < 0 || j >= rho_.n || !rho_.leq(i, j))
    throw InputError("matrix unit (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") is outside the support");
  StructMatrix x = zero();
  x.coeffs[{i, j}] = 1;
  return x;
}

StructMatrix Algebra::make(const std::map<Pos, int>& coeffs) const {
  StructMatrix x = zero();
  for (auto& [pos, val] : coeffs) {
    int v = field_.reduce(val);
    if (v == 0) continue;
    if (!rho_.leq(pos.first, pos.second))
      throw InputError("coefficient at (" + std::to_string(pos.first + 1) + "," +
                       std::to_string(pos.second + 1) + ") is outside the support");
    x.coeffs[pos] = v;
  }
  return x;
}

StructMatrix Algebra::from_dense(const DenseMatrix& d) const {
  StructMatrix x = zero();
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j) {
      int v = d.at(i, j);
      if (v == 0) continue;
      if (!rho_.leq(i, j))
        throw InputError("dense matrix has support outside the relation at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      x.coeffs[{i, j}] = v;
    }
  return x;
}

DenseMatrix Algebra::to_dense(const StructMatrix& x) const {
  DenseMatrix d(rho_.n);
  for (auto& [pos, val] : x.coeffs) d.at(pos.first, pos.second) = val;
  return d;
}

bool Algebra::is_member(const DenseMatrix& d) const {
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j)
      if (d.at(i, j) != 0 && !rho_.leq(i, j)) return false;
  return true;
}

StructMatrix Algebra::add(const StructMatrix& x, const StructMatrix& y) const {
  StructMatrix out = x;
  for (auto& [pos, val] : y.coeffs) {
    int v = field_.add(out.entry(pos.first, pos.second), val);
    if (v == 0)
      out.coeffs.erase(pos);
    else
      out.coeffs[pos] = v;
  }
  return out;
}

StructMatrix Algebra::sub(const StructMatrix& x, const StructMatrix& y) const {
  return add(x, scale(field_.neg(1), y));
}

StructMatrix Algebra::scale(int c, const StructMatrix& x) const {
  StructMatrix out = zero();
  c = field_.reduce(c);
  if (c == 0) return out;
  for (auto& [pos, val] : x.coeffs) out.coeffs[pos] = field_.mul(c, val);
  return out;
}

StructMatrix Algebra::mul(const StructMatrix& x, const StructMatrix& y) const {
  StructMatrix out = zero();
  for (auto& [px, vx] : x.coeffs)
    for (auto& [py, vy] : y.coeffs) {
      if (px.second != py.first) continue;
      Pos pos{px.first, py.second};
      int v = field_.add(out.entry(pos.first, pos.second), field_.mul(vx, vy));
      if (v == 0)
        out.coeffs.erase(pos);
      else
        out.coeffs[pos] = v;
    }
  return out;
}

DenseMatrix Algebra::dense_identity() const {
  DenseMatrix d(rho_.n);
  for (int i = 0; i < rho_.n; ++i) d.at(i, i) = 1;
  return d;
}

DenseMatrix Algebra::dense_mul(const DenseMatrix& x, const DenseMatrix& y) const {
  int n = rho_.n;
  DenseMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(v, y.at(k, j)));
    }
  return out;
}

std::optional<DenseMatrix> Algebra::dense_invert(const DenseMatrix& x) const {
  int n = rho_.n;
  DenseMatrix a = x, inv = dense_identity();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n && piv < 0; ++r)
      if (a.at(r, col) != 0) piv = r;
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    int scale = field_.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = field_.mul(a.at(col, j), scale);
      inv.at(col, j) = field_.mul(inv.at(col, j), scale);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      int f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = field_.sub(a.at(r, j), field_.mul(f, a.at(col, j)));
        inv.at(r, j) = field_.sub(inv.at(r, j), field_.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::optional<StructMatrix> Algebra::invert(const StructMatrix& x) const {
  auto inv = dense_invert(to_dense(x));
  if (!inv) return std::nullopt;
  // the inverse of a unit stays in the algebra (it is a polynomial in x);
  // from_dense double-checks the support
  return from_dense(*inv);
}

std::vector<int> Algebra::tilde(const PosetAutomorphism& g) const {
  const auto& q = poset_;
  std::vector<int> t(rho_.n, -1);
  for (int a = 0; a < q.q; ++a) {
    int b = g.map[a];
    if (q.mult[a] != q.mult[b])
      throw InputError("automorphism does not preserve class sizes at class " +
                       std::to_string(a + 1));
    for (int k = 0; k < q.mult[a]; ++k) t[q.classes[a][k]] = q.classes[b][k];
  }
  return t;
}

DenseMatrix Algebra::shuffle_right(const DenseMatrix& x, const PosetAutomorphism& g) const {
  auto t = tilde(g);
  DenseMatrix out(rho_.n);
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j) out.at(i, j) = x.at(i, t[j]);
  return out;
}

DenseMatrix Algebra::shuffle_left(const PosetAutomorphism& g, const DenseMatrix& x) const {
  auto t = tilde(g);
  DenseMatrix out(rho_.n);
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j) out.at(i, j) = x.at(t[i], j);
  return out;
}

StructMatrix Algebra::shuffle_both(const PosetAutomorphism& g, const StructMatrix& x) const {
  auto t = tilde(g);
  StructMatrix out = zero();
  for (int i = 0; i < rho_.n; ++i)
    for (int j = 0; j < rho_.n; ++j) {
      int v = x.entry(t[i], t[j]);
      if (v != 0) out.coeffs[{i, j}] = v;  // support is preserved by automorphisms
    }
  return out;
}

ScalarTransitive Algebra::scalar_ones() const {
  ScalarTransitive a;
  for (auto& pos : pairs_) a.values[pos] = 1;
  return a;
}

bool Algebra::scalar_valid(const ScalarTransitive& a) const {
  if (int(a.values.size()) != dim()) return false;
  for (auto& [pos, val] : a.values) {
    if (!rho_.leq(pos.first, pos.second)) return false;
    if (val < 1 || val >= field_.p()) return false;
  }
  for (auto& [i, j] : pairs_)
    for (int r : above_[j])
      if (field_.mul(a.at(i, j), a.at(j, r)) != a.at(i, r)) return false;
  return true;
}

ScalarTransitive Algebra::scalar_mul(const ScalarTransitive& a, const ScalarTransitive& b) const {
  ScalarTransitive out;
  for (auto& [pos, val] : a.values) out.values[pos] = field_.mul(val, b.values.at(pos));
  return out;
}

ScalarTransitive Algebra::scalar_inv(const ScalarTransitive& a) const {
  ScalarTransitive out;
  for (auto& [pos, val] : a.values) out.values[pos] = field_.inv(val);
  return out;
}

namespace {

// Path products of a unit labeling of the cover arrows; false when two paths
// between the same classes disagree. w is q x q, -1 where unrelated.
bool unit_cover_products(const QuotientPoset& q, const PrimeField& f,
                         const std::vector<int>& labels, std::vector<int>& w) {
  w.assign(std::size_t(q.q) * q.q, -1);
  std::vector<int> order(q.q);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return q.height[a] != q.height[b] ? q.height[a] < q.height[b] : a < b;
  });
  for (int a = 0; a < q.q; ++a) {
    w[std::size_t(a) * q.q + a] = 1;
    for (int b : order) {
      for (std::size_t e = 0; e < q.hasse.size(); ++e) {
        auto [c, tgt] = q.hasse[e];
        if (tgt != b) continue;
        int base = w[std::size_t(a) * q.q + c];
        if (base < 0) continue;
        int val = f.mul(base, labels[e]);
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

}  // namespace

std::vector<ScalarTransitive> Algebra::enumerate_scalars(long long budget) const {
  const auto& q = poset_;
  int units = field_.p() - 1;

  // free slots: one unit per non-base class member, one per cover arrow
  std::vector<Pos> member_slots;  // (class, member index >= 1)
  for (int a = 0; a < q.q; ++a)
    for (int k = 1; k < q.mult[a]; ++k) member_slots.emplace_back(a, k);
  long long arrows = (long long)q.hasse.size();
  long long candidates = 1;
  for (long long s = 0; s < (long long)member_slots.size() + arrows; ++s) {
    candidates *= units;
    if (candidates > budget)
      throw BudgetExceeded("scalar system enumeration exceeds budget " + std::to_string(budget));
  }

  std::vector<ScalarTransitive> out;
  std::vector<int> arrow_vals(q.hasse.size(), 1);
  std::vector<int> w;
  for (;;) {
    if (unit_cover_products(q, field_, arrow_vals, w)) {
      std::vector<int> member_vals(member_slots.size(), 1);
      for (;;) {
        // assemble: c_i per ground element (base member of each class = 1)
        std::vector<int> c(rho_.n, 1);
        for (std::size_t s = 0; s < member_slots.size(); ++s)
          c[q.classes[member_slots[s].first][member_slots[s].second]] = member_vals[s];
        ScalarTransitive a;
        for (auto& [i, j] : pairs_) {
          int wa = w[std::size_t(q.class_of[i]) * q.q + q.class_of[j]];
          a.values[{i, j}] = field_.mul(c[i], field_.mul(wa, field_.inv(c[j])));
        }
        out.push_back(std::move(a));
        // odometer over member values
        std::size_t s = 0;
        while (s < member_vals.size()) {
          if (++member_vals[s] <= units) break;
          member_vals[s] = 1;
          ++s;
        }
        if (s == member_vals.size()) break;
      }
    }
    std::size_t e = 0;
    while (e < arrow_vals.size()) {
      if (++arrow_vals[e] <= units) break;
      arrow_vals[e] = 1;
      ++e;
    }
    if (e == arrow_vals.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutoTriple Algebra::identity_triple() const {
  AutoTriple t;
  t.mat = identity();
  t.g = identity_automorphism(poset_.q);
  t.scal = scalar_ones();
  return t;
}

bool Algebra::triple_valid(const AutoTriple& t) const {
  if (t.mat.n != rho_.n || int(t.g.map.size()) != poset_.q) return false;
  if (!scalar_valid(t.scal)) return false;
  for (int a = 0; a < poset_.q; ++a)
    if (poset_.mult[a] != poset_.mult[t.g.map[a]]) return false;
  return dense_invert(to_dense(t.mat)).has_value();
}

AutoTriple Algebra::triple_multiply(const AutoTriple& s, const AutoTriple& t) const {
  auto tg = tilde(t.g);
  AutoTriple out;
  // scale the right matrix entrywise by the left scalars, unshuffle by the
  // left automorphism, multiply
  StructMatrix x = zero();
  for (auto& [pos, val] : t.mat.coeffs)
    x.coeffs[pos] = field_.mul(s.scal.at(pos.first, pos.second), val);
  out.mat = mul(s.mat, shuffle_both(inverse(s.g), x));
  out.g = structmat::compose(s.g, t.g);
  for (auto& [pos, val] : t.scal.values)
    out.scal.values[pos] = field_.mul(s.scal.at(tg[pos.first], tg[pos.second]), val);
  return out;
}

AutoTriple Algebra::triple_inverse(const AutoTriple& t) const {
  auto tg = tilde(t.g);
  std::vector<int> tginv(rho_.n);
  for (int i = 0; i < rho_.n; ++i) tginv[tg[i]] = i;
  AutoTriple out;
  out.g = inverse(t.g);
  for (auto& [i, j] : pairs_)
    out.scal.values[{i, j}] = field_.inv(t.scal.at(tginv[i], tginv[j]));
  StructMatrix x = zero();
  for (auto& [pos, val] : t.mat.coeffs)
    x.coeffs[pos] = field_.mul(out.scal.at(pos.first, pos.second), val);
  auto inv = invert(shuffle_both(t.g, x));
  if (!inv) throw InputError("triple matrix is singular");
  out.mat = *inv;
  return out;
}

AlgebraMap Algebra::realize(const AutoTriple& t) const {
  auto tl = tilde(t.g);
  auto ainv = invert(t.mat);
  if (!ainv) throw InputError("realization needs an invertible matrix");
  AlgebraMap m;
  for (auto& [i, j] : pairs_) {
    int gi = tl[i], gj = tl[j];
    int aij = t.scal.at(i, j);
    StructMatrix img = zero();
    for (int s : below_[gi]) {
      int lam = t.mat.entry(s, gi);
      if (lam == 0) continue;
      for (int u : above_[gj]) {
        int lamb = ainv->entry(gj, u);
        if (lamb == 0) continue;
        int c = field_.mul(aij, field_.mul(lam, lamb));
        if (c != 0) img.coeffs[{s, u}] = c;
      }
    }
    m.images[{i, j}] = std::move(img);
  }
  return m;
}

StructMatrix Algebra::apply(const AlgebraMap& m, const StructMatrix& x) const {
  StructMatrix out = zero();
  for (auto& [pos, val] : x.coeffs) out = add(out, scale(val, m.images.at(pos)));
  return out;
}

AlgebraMap Algebra::compose(const AlgebraMap& f, const AlgebraMap& g) const {
  AlgebraMap out;
  for (auto& [pos, img] : g.images) out.images[pos] = apply(f, img);
  return out;
}

AlgebraMap Algebra::identity_map() const {
  AlgebraMap m;
  for (auto& [i, j] : pairs_) m.images[{i, j}] = unit(i, j);
  return m;
}

bool Algebra::map_is_identity(const AlgebraMap& m) const {
  for (auto& [i, j] : pairs_) {
    auto it = m.images.find({i, j});
    if (it == m.images.end() || !(it->second == unit(i, j))) return false;
  }
  return true;
}

bool Algebra::map_valid(const AlgebraMap& m) const {
  if (int(m.images.size()) != dim()) return false;
  StructMatrix sum = zero();
  for (int i = 0; i < rho_.n; ++i) sum = add(sum, m.images.at({i, i}));
  if (!(sum == identity())) return false;
  for (auto& [p1, img1] : m.images)
    for (auto& [p2, img2] : m.images) {
      StructMatrix want =
          p1.second == p2.first ? m.images.at({p1.first, p2.second}) : zero();
      if (!(mul(img1, img2) == want)) return false;
    }
  return true;
}

Algebra::EquivalenceWitness Algebra::triples_equivalent(const AutoTriple& s,
                                                        const AutoTriple& t) const {
  EquivalenceWitness w;
  if (s.g.map != t.g.map) return w;
  DenseMatrix ag = shuffle_right(to_dense(s.mat), s.g);
  DenseMatrix bg = shuffle_right(to_dense(t.mat), s.g);
  auto aginv = dense_invert(ag);
  if (!aginv) return w;
  DenseMatrix cand = dense_mul(*aginv, bg);
  std::vector<int> d(rho_.n);
  for (int i = 0; i < rho_.n; ++i) {
    for (int j = 0; j < rho_.n; ++j)
      if (i != j && cand.at(i, j) != 0) return w;
    if (cand.at(i, i) == 0) return w;
    d[i] = cand.at(i, i);
  }
  for (auto& [i, j] : pairs_) {
    int lhs = field_.mul(s.scal.at(i, j), field_.inv(t.scal.at(i, j)));
    int rhs = field_.mul(d[i], field_.inv(d[j]));
    if (lhs != rhs) return w;
  }
  w.equal = true;
  w.d = std::move(d);
  return w;
}

bool Algebra::in_diagonal_kernel(const AutoTriple& t) const {
  if (!t.g.is_identity()) return false;
  std::vector<int> d(rho_.n);
  for (auto& kv : t.mat.coeffs)
    if (kv.first.first != kv.first.second) return false;
  for (int i = 0; i < rho_.n; ++i) {
    int v = t.mat.entry(i, i);
    if (v == 0) return false;
    d[i] = v;
  }
  for (auto& [i, j] : pairs_)
    if (t.scal.at(i, j) != field_.mul(field_.inv(d[i]), d[j])) return false;
  return true;
}

std::vector<StructMatrix> Algebra::center_basis() const {
  std::vector<StructMatrix> out;
  for (int t = 0; t < poset_.components; ++t) {
    StructMatrix z = zero();
    for (int i = 0; i < rho_.n; ++i)
      if (poset_.comp[poset_.class_of[i]] == t) z.coeffs[{i, i}] = 1;
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<Pos> Algebra::comparability_edges() const {
  const auto& q = poset_;
  std::vector<Pos> out;
  for (int i = 0; i < rho_.n; ++i)
    for (int j = i + 1; j < rho_.n; ++j) {
      int a = q.class_of[i], b = q.class_of[j];
      if (a != b && (q.leq(a, b) || q.leq(b, a))) out.emplace_back(i, j);
    }
  return out;
}

std::vector<Pos> Algebra::default_forest() const {
  auto edges = comparability_edges();
  std::vector<std::vector<int>> adj(rho_.n);
  for (auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  std::vector<char> seen(rho_.n, 0);
  std::vector<Pos> forest;
  for (int root = 0; root < rho_.n; ++root) {
    if (seen[root] || adj[root].empty()) continue;
    seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          forest.emplace_back(std::min(v, w), std::max(v, w));
          queue.push_back(w);
        }
    }
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

Algebra::ScalarSplit Algebra::scalar_split(const ScalarTransitive& a,
                                           const std::vector<Pos>& forest) const {
  const auto& q = poset_;
  // validate the forest: edges must be comparability edges, acyclic, spanning
  auto edges = comparability_edges();
  std::vector<char> is_vertex(rho_.n, 0);
  for (auto& [i, j] : edges) is_vertex[i] = is_vertex[j] = 1;
  std::unordered_set<long long> edge_set;
  for (auto& [i, j] : edges) edge_set.insert(1LL * i * rho_.n + j);
  std::vector<int> parent(rho_.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [i, j] : forest) {
    if (!edge_set.count(1LL * std::min(i, j) * rho_.n + std::max(i, j)))
      throw InputError("forest edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") is not a comparability edge");
    int ri = find(i), rj = find(j);
    if (ri == rj)
      throw InputError("forest has a cycle through (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")");
    parent[ri] = rj;
  }
  for (auto& [i, j] : edges)
    if (find(i) != find(j))
      throw InputError("forest does not span the comparability component of (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  ScalarSplit out;
  out.d.assign(rho_.n, 1);
  std::vector<std::vector<int>> adj(rho_.n);
  for (auto& [i, j] : forest) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(rho_.n, 0);
  for (int root = 0; root < rho_.n; ++root) {
    if (seen[root] || !is_vertex[root]) continue;
    seen[root] = 1;
    out.d[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        // a_wv = d_w d_v^{-1} on the discovered edge
        if (rho_.leq(w, v))
          out.d[w] = field_.mul(a.at(w, v), out.d[v]);
        else
          out.d[w] = field_.mul(field_.inv(a.at(v, w)), out.d[v]);
        queue.push_back(w);
      }
    }
  }
  for (int c = 0; c < q.q; ++c) {
    if (is_vertex[q.classes[c][0]]) continue;  // isolated classes only
    int last = q.classes[c].back();
    out.d[last] = 1;
    for (int i : q.classes[c])
      if (i != last) out.d[i] = a.at(i, last);
  }
  for (auto& [i, j] : pairs_)
    out.residual.values[{i, j}] =
        field_.mul(a.at(i, j), field_.mul(field_.inv(out.d[i]), out.d[j]));
  return out;
}

bool Algebra::residual_normalized(const ScalarTransitive& a,
                                  const std::vector<Pos>& forest) const {
  for (auto& [i, j] : forest) {
    if (rho_.leq(i, j) && a.at(i, j) != 1) return false;
    if (rho_.leq(j, i) && a.at(j, i) != 1) return false;
  }
  auto edges = comparability_edges();
  std::vector<char> is_vertex(rho_.n, 0);
  for (auto& [i, j] : edges) is_vertex[i] = is_vertex[j] = 1;
  const auto& q = poset_;
  for (int c = 0; c < q.q; ++c) {
    if (is_vertex[q.classes[c][0]]) continue;
    for (int i : q.classes[c])
      for (int j : q.classes[c])
        if (i != j && a.at(i, j) != 1) return false;
  }
  return true;
}

std::vector<ScalarTransitive> Algebra::normalized_scalars(const std::vector<Pos>& forest,
                                                          long long budget) const {
  std::vector<ScalarTransitive> out;
  for (auto& a : enumerate_scalars(budget))
    if (residual_normalized(a, forest)) out.push_back(a);
  return out;
}

namespace {

// p^j - 1 as (p-1) * (1 + p + ... + p^{j-1}); returns the geometric part
BigNat geometric_sum(std::uint32_t p, int j) {
  BigNat g = BigNat::from_u64(0);
  for (int k = 0; k < j; ++k) g = g.mul_small(p).add(BigNat::one());
  return g;
}

}  // namespace

BigNat Algebra::unit_group_order() const {
  const auto& q = poset_;
  std::uint32_t p = std::uint32_t(field_.p());
  BigNat total = BigNat::one();
  long long cross = 0;
  for (int a = 0; a < q.q; ++a) {
    int m = q.mult[a];
    total = total.pow_u32(p, std::uint32_t(m * (m - 1) / 2));
    total = total.pow_u32(p - 1, std::uint32_t(m));
    for (int j = 1; j <= m; ++j) total = total.mul(geometric_sum(p, j));
    for (int b = 0; b < q.q; ++b)
      if (a != b && q.leq(a, b)) cross += (long long)m * q.mult[b];
  }
  total = total.pow_u32(p, std::uint32_t(cross));
  return total;
}

BigNat Algebra::diagonal_kernel_order() const {
  return BigNat::one().pow_u32(std::uint32_t(field_.p() - 1), std::uint32_t(rho_.n));
}

BigNat Algebra::automorphism_group_order(unsigned long long aut0_count,
                                         const BigNat& scalar_count) const {
  const auto& q = poset_;
  std::uint32_t p = std::uint32_t(field_.p());
  // |U| * aut0 * |T| / (p-1)^n, with the kernel cancelled class by class
  BigNat total = BigNat::one();
  long long cross = 0;
  for (int a = 0; a < q.q; ++a) {
    int m = q.mult[a];
    total = total.pow_u32(p, std::uint32_t(m * (m - 1) / 2));
    for (int j = 1; j <= m; ++j) total = total.mul(geometric_sum(p, j));
    for (int b = 0; b < q.q; ++b)
      if (a != b && q.leq(a, b)) cross += (long long)m * q.mult[b];
  }
  total = total.pow_u32(p, std::uint32_t(cross));
  total = total.mul(BigNat::from_u64(aut0_count));
  total = total.mul(scalar_count);
  return total;
}

std::vector<std::uint32_t> stable_subspaces_f2(const Preorder& rho) {
  int n = rho.n;
  if (n > 5)
    throw BudgetExceeded("stable subspace scan is limited to n <= 5, got n = " +
                         std::to_string(n));
  int vecs = 1 << n;
  // enumerate all subspaces of F_2^n as membership masks, by closure growth
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> queue{1u};  // {0}
  seen.insert(1u);
  auto translate = [&](std::uint32_t mask, int v) {
    std::uint32_t out = 0;
    for (int x = 0; x < vecs; ++x)
      if (mask >> x & 1) out |= 1u << (x ^ v);
    return out;
  };
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::uint32_t s = queue[h];
    for (int v = 1; v < vecs; ++v) {
      if (s >> v & 1) continue;
      std::uint32_t grown = s | translate(s, v);
      if (seen.insert(grown).second) queue.push_back(grown);
    }
  }
  std::vector<std::uint32_t> stable;
  for (std::uint32_t s : queue) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!rho.leq(i, j)) continue;
        // unit e_ij sends a vector with coordinate j to basis vector i
        bool hits = false;
        for (int x = 0; x < vecs && !hits; ++x)
          if ((s >> x & 1) && (x >> j & 1)) hits = true;
        if (hits && !(s >> (1 << i) & 1)) ok = false;
      }
    if (ok) stable.push_back(s);
  }
  std::sort(stable.begin(), stable.end());
  return stable;
}

std::uint32_t antichain_subspace_mask_f2(const QuotientPoset& q, Antichain d) {
  int coords = 0;
  for (int i = 0; i < q.n; ++i) {
    int a = q.class_of[i];
    for (int b = 0; b < q.q; ++b)
      if ((d >> b & 1) && q.leq(a, b)) {
        coords |= 1 << i;
        break;
      }
  }
  std::uint32_t mask = 0;
  for (int x = 0; x < (1 << q.n); ++x)
    if ((x & ~coords) == 0) mask |= 1u << x;
  return mask;
}

long long count_algebra_automorphisms_bruteforce(const Algebra& alg, long long budget) {
  int d = alg.dim();
  long long space = 1;
  for (int k = 0; k < d; ++k) {
    space *= alg.field().p();
    if (space > budget)
      throw BudgetExceeded("automorphism search space exceeds budget " + std::to_string(budget));
  }
  long long total = 1;
  for (int k = 0; k < d; ++k) {
    if (total > budget / space)
      throw BudgetExceeded("automorphism search space exceeds budget " + std::to_string(budget));
    total *= space;
  }

  const auto& pairs = alg.basis_pairs();
  auto decode = [&](long long code) {
    StructMatrix x;
    x.n = alg.n();
    for (auto& pos : pairs) {
      int v = int(code % alg.field().p());
      code /= alg.field().p();
      if (v != 0) x.coeffs[pos] = v;
    }
    return x;
  };

  long long count = 0;
  std::vector<long long> slot(d, 0);
  for (long long iter = 0; iter < total; ++iter) {
    AlgebraMap m;
    for (int k = 0; k < d; ++k) m.images[pairs[k]] = decode(slot[k]);
    if (alg.map_valid(m)) {
      // bijectivity: images span the algebra
      int n_ = d;
      std::vector<std::vector<int>> rows;
      for (int k = 0; k < d; ++k) {
        std::vector<int> row(n_, 0);
        const auto& img = m.images[pairs[k]];
        for (int c = 0; c < n_; ++c) row[c] = img.entry(pairs[c].first, pairs[c].second);
        rows.push_back(std::move(row));
      }
      int rank = 0;
      for (int col = 0; col < n_ && rank < d; ++col) {
        int piv = -1;
        for (int r = rank; r < d && piv < 0; ++r)
          if (rows[r][col] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int inv = alg.field().inv(rows[rank][col]);
        for (int c = 0; c < n_; ++c) rows[rank][c] = alg.field().mul(rows[rank][c], inv);
        for (int r = 0; r < d; ++r) {
          if (r == rank || rows[r][col] == 0) continue;
          int f = rows[r][col];
          for (int c = 0; c < n_; ++c)
            rows[r][c] = alg.field().sub(rows[r][c], alg.field().mul(f, rows[rank][c]));
        }
        ++rank;
      }
      if (rank == d) ++count;
    }
    int k = 0;
    while (k < d) {
      if (++slot[k] < space) break;
      slot[k] = 0;
      ++k;
    }
  }
  return count;
}

}  // namespace structmat
