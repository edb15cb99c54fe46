#pragma once

#include <vector>

#include "structmat/group.hpp"

namespace structmat {

// Dense integer matrix with checked 64-bit arithmetic; any overflow during a
// reduction throws std::overflow_error rather than wrapping.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // row major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  long long& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  long long at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_identity(int n);
long long int_det(IntMatrix m);  // fraction-free elimination, checked

// Smith normal form. factors has min(rows, cols) entries, nonneg, each
// dividing the next (trailing zeros for rank deficiency); rank counts the
// nonzero ones. u and v are unimodular with u * m * v = diag(factors).
struct SmithResult {
  std::vector<long long> factors;
  int rank = 0;
  IntMatrix u, v;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Whether every homomorphism from Z^rank (+) sum_i Z/d_i into G is trivial:
// the free part forces rank = 0 and each finite d_i > 1 must meet no
// nonidentity element of G of order dividing d_i. A trivial target makes the
// answer true regardless.
bool hom_triviality(const std::vector<long long>& factors, int rank,
                    const FiniteGroup& g);

}  // namespace structmat
