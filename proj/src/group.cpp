#include "structmat/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace structmat {

void FiniteGroup::finish(const std::string& name) {
  name_ = name;
  int n = order_;
  if (n < 1 || int(table_.size()) != n * n)
    throw InputError("group \"" + name + "\": bad table size");
  for (int v : table_)
    if (v < 0 || v >= n) throw InputError("group \"" + name + "\": entry out of range");

  // locate the (unique) two-sided identity, relabel it to 0 if needed
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (mul(a, b) != b || mul(b, a) != b) ok = false;
    if (ok) e = a;
  }
  if (e < 0) throw InputError("group \"" + name + "\": no identity element");
  if (e != 0) {
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[e]);  // involution
    std::vector<int> nt(table_.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        nt[std::size_t(relabel[a]) * n + relabel[b]] = relabel[mul(a, b)];
    table_ = std::move(nt);
    if (!labels_.empty()) {
      std::vector<std::string> nl(n);
      for (int a = 0; a < n; ++a) nl[relabel[a]] = labels_[a];
      labels_ = std::move(nl);
    }
  }

  // latin square rows/cols
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[mul(a, b)]++)
        throw InputError("group \"" + name + "\": row " + std::to_string(a) +
                         " is not a permutation");
      if (col[mul(b, a)]++)
        throw InputError("group \"" + name + "\": column " + std::to_string(a) +
                         " is not a permutation");
    }
  }
  // associativity, with witness
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("group \"" + name + "\": associativity fails at (" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0 || mul(inv_[a], a) != 0)
      throw InputError("group \"" + name + "\": element " + std::to_string(a) +
                       " has no two-sided inverse");
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
  if (labels_.empty()) {
    labels_.resize(n);
    for (int a = 0; a < n; ++a) labels_[a] = std::to_string(a);
  }
}

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) return power(inv_[a], -e);
  int acc = 0, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string FiniteGroup::label(int a) const { return labels_[a]; }

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw InputError("cyclic group order must be positive");
  FiniteGroup g;
  g.order_ = m;
  g.table_.resize(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.table_[std::size_t(a) * m + b] = (a + b) % m;
  g.labels_.resize(m);
  for (int a = 0; a < m; ++a) g.labels_[a] = a == 0 ? "e" : "s" + std::to_string(a);
  g.finish("Z" + std::to_string(m));
  return g;
}

FiniteGroup FiniteGroup::symmetric(int m) {
  if (m < 1 || m > 5) throw InputError("symmetric group degree must be 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = int(perms.size());
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(std::size_t(n) * n);
  auto index_of = [&](const std::vector<int>& x) {
    return int(std::lower_bound(perms.begin(), perms.end(), x) - perms.begin());
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(m);  // (ab)(x) = a(b(x))
      for (int x = 0; x < m; ++x) comp[x] = perms[a][perms[b][x]];
      g.table_[std::size_t(a) * n + b] = index_of(comp);
    }
  g.labels_.resize(n);
  for (int a = 0; a < n; ++a) {
    std::string word = "(";
    for (int x = 0; x < m; ++x) word += std::to_string(perms[a][x] + 1);
    g.labels_[a] = word + ")";
  }
  g.finish("S" + std::to_string(m));
  return g;
}

FiniteGroup FiniteGroup::dihedral(int m) {
  if (m < 1) throw InputError("dihedral parameter must be positive");
  int n = 2 * m;
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(std::size_t(n) * n);
  auto enc = [m](int rot, int flip) { return rot + m * flip; };
  for (int r1 = 0; r1 < m; ++r1)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int r2 = 0; r2 < m; ++r2)
        for (int f2 = 0; f2 < 2; ++f2) {
          // (r^r1 s^f1)(r^r2 s^f2) = r^(r1 + r2 or r1 - r2) s^(f1+f2)
          int rot = f1 == 0 ? (r1 + r2) % m : ((r1 - r2) % m + m) % m;
          g.table_[std::size_t(enc(r1, f1)) * n + enc(r2, f2)] = enc(rot, (f1 + f2) % 2);
        }
  g.labels_.resize(n);
  for (int r = 0; r < m; ++r)
    for (int f = 0; f < 2; ++f) {
      std::string w = r == 0 && f == 0 ? "e" : "";
      if (r > 0) w += "r" + (r > 1 ? std::to_string(r) : "");
      if (f > 0) w += "s";
      g.labels_[enc(r, f)] = w;
    }
  g.finish("D" + std::to_string(m));
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order_ * b.order_;
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(std::size_t(n) * n);
  auto enc = [&](int x, int y) { return x * b.order_ + y; };
  for (int x1 = 0; x1 < a.order_; ++x1)
    for (int y1 = 0; y1 < b.order_; ++y1)
      for (int x2 = 0; x2 < a.order_; ++x2)
        for (int y2 = 0; y2 < b.order_; ++y2)
          g.table_[std::size_t(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  g.labels_.resize(n);
  for (int x = 0; x < a.order_; ++x)
    for (int y = 0; y < b.order_; ++y)
      g.labels_[enc(x, y)] = "(" + a.labels_[x] + "," + b.labels_[y] + ")";
  g.finish(a.name_ + "x" + b.name_);
  return g;
}

FiniteGroup FiniteGroup::from_table(int order, const std::vector<int>& table,
                                    const std::string& name) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = table;
  g.finish(name);
  return g;
}

namespace {

FiniteGroup parse_atom(const std::string& atom) {
  if (atom.size() >= 2 && (atom[0] == 'Z' || atom[0] == 'S' || atom[0] == 'D')) {
    int m;
    try {
      std::size_t used;
      m = std::stoi(atom.substr(1), &used);
      if (used + 1 != atom.size()) throw InputError("");
    } catch (...) {
      throw InputError("bad group token \"" + atom + "\"");
    }
    switch (atom[0]) {
      case 'Z': return FiniteGroup::cyclic(m);
      case 'S': return FiniteGroup::symmetric(m);
      default: return FiniteGroup::dihedral(m);
    }
  }
  throw InputError("bad group token \"" + atom + "\"");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
  if (spec.empty()) throw InputError("empty group spec");
  if (spec.rfind("table:", 0) == 0) {
    std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group table \"" + path + "\"");
    int order;
    if (!(in >> order) || order < 1) throw InputError("group table \"" + path + "\": bad order");
    std::vector<int> table(std::size_t(order) * order);
    for (auto& v : table)
      if (!(in >> v))
        throw InputError("group table \"" + path + "\": expected " +
                         std::to_string(order * order) + " entries");
    return FiniteGroup::from_table(order, table, "table(" + path + ")");
  }
  std::vector<std::string> atoms;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      atoms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  atoms.push_back(cur);
  FiniteGroup g = parse_atom(atoms[0]);
  for (std::size_t k = 1; k < atoms.size(); ++k)
    g = FiniteGroup::direct_product(g, parse_atom(atoms[k]));
  return g;
}

}  // namespace structmat
