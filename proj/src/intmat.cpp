#include "structmat/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace structmat {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in product");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sum");
  return r;
}

}  // namespace

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, y.at(k, j)));
    }
  return out;
}

IntMatrix int_identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

long long int_det(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows;
  // Bareiss fraction-free elimination
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (m.at(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        long long num = checked_add(checked_mul(m.at(i, j), m.at(k, k)),
                                    -checked_mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = num / prev;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct Smith {
  IntMatrix w, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(a, j), w.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, a), w.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, long long c) {  // row dst += c * row src
    for (int j = 0; j < w.cols; ++j)
      w.at(dst, j) = checked_add(w.at(dst, j), checked_mul(c, w.at(src, j)));
    for (int j = 0; j < u.cols; ++j)
      u.at(dst, j) = checked_add(u.at(dst, j), checked_mul(c, u.at(src, j)));
  }
  void add_col(int dst, int src, long long c) {
    for (int i = 0; i < w.rows; ++i)
      w.at(i, dst) = checked_add(w.at(i, dst), checked_mul(c, w.at(i, src)));
    for (int i = 0; i < v.rows; ++i)
      v.at(i, dst) = checked_add(v.at(i, dst), checked_mul(c, v.at(i, src)));
  }
  void negate_row(int a) {
    for (int j = 0; j < w.cols; ++j) w.at(a, j) = -w.at(a, j);
    for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  Smith s;
  s.w = m;
  s.u = int_identity(m.rows);
  s.v = int_identity(m.cols);
  int n = std::min(m.rows, m.cols);

  for (int k = 0; k < n; ++k) {
    // find a nonzero pivot of least magnitude in the trailing block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = k; i < m.rows; ++i)
      for (int j = k; j < m.cols; ++j) {
        long long v = std::llabs(s.w.at(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    s.swap_rows(k, pi);
    s.swap_cols(k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = k + 1; i < m.rows; ++i) {
        long long q = s.w.at(i, k) / s.w.at(k, k);
        if (q != 0) s.add_row(i, k, -q);
        if (s.w.at(i, k) != 0) {
          s.swap_rows(k, i);  // the remainder is smaller, restart cleaning
          clean = false;
        }
      }
      for (int j = k + 1; j < m.cols; ++j) {
        long long q = s.w.at(k, j) / s.w.at(k, k);
        if (q != 0) s.add_col(j, k, -q);
        if (s.w.at(k, j) != 0) {
          s.swap_cols(k, j);
          clean = false;
        }
      }
    }
    if (s.w.at(k, k) < 0) s.negate_row(k);

    // enforce divisibility into the rest of the block
    for (int i = k + 1; i < m.rows; ++i)
      for (int j = k + 1; j < m.cols; ++j)
        if (s.w.at(i, j) % s.w.at(k, k) != 0) {
          s.add_col(k, j, 1);
          --k;  // redo this pivot with the offending entry mixed in
          i = m.rows;
          break;
        }
  }

  SmithResult res;
  res.factors.resize(n, 0);
  for (int k = 0; k < n; ++k) {
    res.factors[k] = s.w.at(k, k);
    if (res.factors[k] != 0) ++res.rank;
  }
  res.u = std::move(s.u);
  res.v = std::move(s.v);
  return res;
}

bool hom_triviality(const std::vector<long long>& factors, int rank, const FiniteGroup& g) {
  if (g.trivial()) return true;
  if (rank > 0) return false;
  for (long long d : factors) {
    if (d == 1) continue;
    if (d == 0) return false;  // hidden free summand
    for (int a = 1; a < g.order(); ++a)
      if (d % g.element_order(a) == 0) return false;
  }
  return true;
}

}  // namespace structmat
