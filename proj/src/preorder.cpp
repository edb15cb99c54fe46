#include "structmat/preorder.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace structmat {

std::vector<std::pair<int, int>> Preorder::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Preorder::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

ClosureResult make_preorder(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) throw InputError("ground set size must be positive, got " + std::to_string(n));
  Preorder p;
  p.n = n;
  p.rel.assign(std::size_t(n) * n, 0);
  for (auto& [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw InputError("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") out of range for n=" + std::to_string(n));
    p.rel[std::size_t(i) * n + j] = 1;
  }
  Preorder before = p;
  int added = 0;
  for (int i = 0; i < n; ++i)
    if (!p.leq(i, i)) {
      p.rel[std::size_t(i) * n + i] = 1;
      ++added;
    }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!p.leq(i, k)) continue;
      for (int j = 0; j < n; ++j)
        if (p.leq(k, j) && !p.leq(i, j)) {
          p.rel[std::size_t(i) * n + j] = 1;
          ++added;
        }
    }
  ClosureResult res;
  res.preorder = std::move(p);
  res.was_closed = (added == 0);
  res.added = added;
  return res;
}

std::vector<std::vector<int>> equivalence_classes(const Preorder& p) {
  int n = p.n;
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = int(classes.size());
    classes.push_back({i});
    cls[i] = id;
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && p.leq(i, j) && p.leq(j, i)) {
        cls[j] = id;
        classes[id].push_back(j);
      }
  }
  // scanning ascending already yields ascending minimum order; members sorted
  return classes;
}

void components_and_heights(QuotientPoset& q) {
  int m = q.q;
  // undirected cover-graph components, numbered by least class
  q.comp.assign(m, -1);
  std::vector<std::vector<int>> adj(m);
  for (auto& [a, b] : q.hasse) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int next = 0;
  for (int s = 0; s < m; ++s) {
    if (q.comp[s] >= 0) continue;
    int id = next++;
    std::vector<int> stack{s};
    q.comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (q.comp[w] < 0) {
          q.comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  q.components = next;

  // minimal-element peeling
  q.height.assign(m, -1);
  std::vector<char> gone(m, 0);
  int remaining = m, level = 0;
  while (remaining > 0) {
    std::vector<int> layer;
    for (int a = 0; a < m; ++a) {
      if (gone[a]) continue;
      bool minimal = true;
      for (int b = 0; b < m && minimal; ++b)
        if (!gone[b] && b != a && q.leq(b, a)) minimal = false;
      if (minimal) layer.push_back(a);
    }
    for (int a : layer) {
      q.height[a] = level;
      gone[a] = 1;
    }
    remaining -= int(layer.size());
    ++level;
  }
}

QuotientPoset quotient_order(const Preorder& p) {
  QuotientPoset q;
  q.n = p.n;
  q.classes = equivalence_classes(p);
  q.q = int(q.classes.size());
  q.class_of.assign(p.n, -1);
  for (int a = 0; a < q.q; ++a)
    for (int i : q.classes[a]) q.class_of[i] = a;
  q.mult.resize(q.q);
  for (int a = 0; a < q.q; ++a) q.mult[a] = int(q.classes[a].size());

  q.leq_table.assign(std::size_t(q.q) * q.q, 0);
  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b)
      if (p.leq(q.classes[a][0], q.classes[b][0]))
        q.leq_table[std::size_t(a) * q.q + b] = 1;

  for (int a = 0; a < q.q; ++a)
    for (int b = 0; b < q.q; ++b) {
      if (a == b || !q.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < q.q && cover; ++c)
        if (c != a && c != b && q.leq(a, c) && q.leq(c, b)) cover = false;
      if (cover) q.hasse.emplace_back(a, b);
    }
  std::sort(q.hasse.begin(), q.hasse.end());

  components_and_heights(q);
  return q;
}

namespace {

ClosureResult parse_json_preorder(const std::string& content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad json preorder: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw InputError("json preorder needs an integer field \"n\"");
  int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> pairs;
  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_array()) throw InputError("json preorder field \"pairs\" must be an array");
    for (auto& e : doc["pairs"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("json preorder pairs must be [i,j] integer arrays");
      pairs.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
  }
  return make_preorder(n, pairs);
}

}  // namespace

ClosureResult parse_preorder(const std::string& content) {
  auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty preorder input");
  if (content[first] == '{') return parse_json_preorder(content);

  std::istringstream in(content);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      if (tok != "n")
        throw InputError("line " + std::to_string(lineno) + ": expected \"n <count>\", got \"" +
                         tok + "\"");
      if (!(ls >> n) || n < 1)
        throw InputError("line " + std::to_string(lineno) + ": bad ground set size");
      continue;
    }
    int i, j;
    try {
      i = std::stoi(tok);
    } catch (...) {
      throw InputError("line " + std::to_string(lineno) + ": bad index \"" + tok + "\"");
    }
    if (!(ls >> j))
      throw InputError("line " + std::to_string(lineno) + ": pair needs two indices");
    std::string extra;
    if (ls >> extra)
      throw InputError("line " + std::to_string(lineno) + ": trailing token \"" + extra + "\"");
    pairs.emplace_back(i - 1, j - 1);
  }
  if (n < 0) throw InputError("missing \"n <count>\" header line");
  return make_preorder(n, pairs);
}

ClosureResult load_preorder_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open preorder file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_preorder(buf.str());
}

std::string format_preorder(const Preorder& p) {
  std::ostringstream out;
  out << "n " << p.n << "\n";
  for (auto& [i, j] : p.strict_pairs()) out << (i + 1) << " " << (j + 1) << "\n";
  return out.str();
}

}  // namespace structmat
