#include "structmat/families.hpp"

#include "structmat/errors.hpp"

namespace structmat {
namespace families {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Preorder chain(int n) {
  need(n >= 1, "chain needs at least one element");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return make_preorder(n, pairs).preorder;
}

Preorder full(int n) {
  need(n >= 1, "full shape needs at least one element");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  return make_preorder(n, pairs).preorder;
}

Preorder antichain_shape(int n) {
  need(n >= 1, "antichain needs at least one element");
  return make_preorder(n, {}).preorder;
}

Preorder crown(int k) {
  need(k >= 2, "crown needs at least two sources");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(i, k + i);
    pairs.emplace_back(i, k + (i + 1) % k);
  }
  return make_preorder(2 * k, pairs).preorder;
}

Preorder two_paths(int m, int p) {
  need(m >= 3, "first path needs length at least two");
  need(p >= 1, "second path needs length at least two");
  int n = m + p;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 <= m - 2; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(m - 2, n - 1);
  pairs.emplace_back(0, m - 1);
  for (int i = m - 1; i + 1 <= n - 2; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(n - 2, n - 1);
  return make_preorder(n, pairs).preorder;
}

Preorder augmented_crown(int k) {
  need(k >= 2, "crown needs at least two sources");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(i, k + i);
    pairs.emplace_back(i, k + (i + 1) % k);
    pairs.emplace_back(k + i, 2 * k);
  }
  return make_preorder(2 * k + 1, pairs).preorder;
}

}  // namespace families
}  // namespace structmat
