#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "structmat/antichain.hpp"
#include "structmat/bignat.hpp"
#include "structmat/field.hpp"
#include "structmat/preorder.hpp"

namespace structmat {

using Pos = std::pair<int, int>;

// Element of the algebra of n x n matrices supported on the preorder:
// sparse nonzero coefficients, every key a related pair.
struct StructMatrix {
  int n = 0;
  std::map<Pos, int> coeffs;

  int entry(int i, int j) const {
    auto it = coeffs.find({i, j});
    return it == coeffs.end() ? 0 : it->second;
  }
  bool operator==(const StructMatrix& o) const { return n == o.n && coeffs == o.coeffs; }
  bool operator<(const StructMatrix& o) const { return coeffs < o.coeffs; }
};

// Plain dense matrix over the field; one-sided shuffles leave the structural
// support, so they land here.
struct DenseMatrix {
  int n = 0;
  std::vector<int> a;

  DenseMatrix() = default;
  explicit DenseMatrix(int size) : n(size), a(std::size_t(size) * size, 0) {}
  int& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  int at(int i, int j) const { return a[std::size_t(i) * n + j]; }
  bool operator==(const DenseMatrix& o) const { return n == o.n && a == o.a; }
};

// Unit-valued system a_ij on related pairs with a_ij a_jr = a_ir. The group
// of these (pointwise product) controls the non-inner automorphisms.
struct ScalarTransitive {
  std::map<Pos, int> values;  // every related pair, value in 1..p-1

  int at(int i, int j) const { return values.at({i, j}); }
  bool operator==(const ScalarTransitive& o) const { return values == o.values; }
  bool operator<(const ScalarTransitive& o) const { return values < o.values; }
};

// (invertible element, class-size-preserving order automorphism, scalar
// system): the raw data realizing an algebra automorphism.
struct AutoTriple {
  StructMatrix mat;
  PosetAutomorphism g;
  ScalarTransitive scal;
};

// Algebra endomorphism recorded by its matrix-unit images.
struct AlgebraMap {
  std::map<Pos, StructMatrix> images;

  bool operator==(const AlgebraMap& o) const { return images == o.images; }
};

// Context object tying a preorder to a prime field; owns the derived class
// poset and exposes every algebra-level operation.
class Algebra {
 public:
  Algebra(Preorder rho, PrimeField field);

  const Preorder& rho() const { return rho_; }
  const QuotientPoset& poset() const { return poset_; }
  const PrimeField& field() const { return field_; }
  int n() const { return rho_.n; }
  int dim() const { return int(pairs_.size()); }
  const std::vector<Pos>& basis_pairs() const { return pairs_; }

  // --- elements ---------------------------------------------------------
  StructMatrix zero() const;
  StructMatrix identity() const;
  StructMatrix unit(int i, int j) const;  // matrix unit, requires i rho j
  StructMatrix make(const std::map<Pos, int>& coeffs) const;  // validates support
  StructMatrix from_dense(const DenseMatrix& d) const;        // throws off-support
  DenseMatrix to_dense(const StructMatrix& x) const;
  bool is_member(const DenseMatrix& d) const;

  StructMatrix add(const StructMatrix& x, const StructMatrix& y) const;
  StructMatrix sub(const StructMatrix& x, const StructMatrix& y) const;
  StructMatrix scale(int c, const StructMatrix& x) const;
  StructMatrix mul(const StructMatrix& x, const StructMatrix& y) const;
  std::optional<StructMatrix> invert(const StructMatrix& x) const;

  DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y) const;
  std::optional<DenseMatrix> dense_invert(const DenseMatrix& x) const;
  DenseMatrix dense_identity() const;

  // --- shuffles ---------------------------------------------------------
  // Ground permutation induced by a class-size-preserving automorphism:
  // order-preserving on each class.
  std::vector<int> tilde(const PosetAutomorphism& g) const;

  DenseMatrix shuffle_right(const DenseMatrix& x, const PosetAutomorphism& g) const;  // (i,j) -> x(i, ~g(j))
  DenseMatrix shuffle_left(const PosetAutomorphism& g, const DenseMatrix& x) const;   // (i,j) -> x(~g(i), j)
  StructMatrix shuffle_both(const PosetAutomorphism& g, const StructMatrix& x) const; // (i,j) -> x(~g(i), ~g(j))

  // --- scalar systems ---------------------------------------------------
  ScalarTransitive scalar_ones() const;
  bool scalar_valid(const ScalarTransitive& a) const;
  ScalarTransitive scalar_mul(const ScalarTransitive& a, const ScalarTransitive& b) const;
  ScalarTransitive scalar_inv(const ScalarTransitive& a) const;

  // Every scalar system, order-normalized. Budget bounds the candidate count.
  std::vector<ScalarTransitive> enumerate_scalars(long long budget = 1'000'000) const;

  // --- triples and the realization map ----------------------------------
  AutoTriple identity_triple() const;
  bool triple_valid(const AutoTriple& t) const;
  AutoTriple triple_multiply(const AutoTriple& s, const AutoTriple& t) const;  // s * t
  AutoTriple triple_inverse(const AutoTriple& t) const;

  // Matrix-unit images of the automorphism realized by a triple.
  AlgebraMap realize(const AutoTriple& t) const;

  StructMatrix apply(const AlgebraMap& m, const StructMatrix& x) const;
  AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) const;  // f after g
  AlgebraMap identity_map() const;
  bool map_is_identity(const AlgebraMap& m) const;
  bool map_valid(const AlgebraMap& m) const;  // unital + multiplicative on units

  // --- fibers of the realization ----------------------------------------
  // Same automorphism iff same g and a diagonal d relates the data:
  // scal ratio d_i d_j^{-1} and mat_t^g = mat_s^g diag(d).
  struct EquivalenceWitness {
    bool equal = false;
    std::vector<int> d;  // valid when equal
  };
  EquivalenceWitness triples_equivalent(const AutoTriple& s, const AutoTriple& t) const;
  bool in_diagonal_kernel(const AutoTriple& t) const;  // realizes the identity

  // --- center -----------------------------------------------------------
  // One indicator diagonal per connected component of the class poset.
  std::vector<StructMatrix> center_basis() const;

  // --- unit-forest decomposition of scalar systems ----------------------
  // Support graph: ground elements whose class is comparable to another
  // class; edges between elements of distinct comparable classes.
  std::vector<Pos> comparability_edges() const;
  std::vector<Pos> default_forest() const;  // BFS trees rooted at least vertices

  struct ScalarSplit {
    std::vector<int> d;         // unit diagonal, per ground element
    ScalarTransitive residual;  // normalized part: 1 on forest + isolated classes
  };
  ScalarSplit scalar_split(const ScalarTransitive& a, const std::vector<Pos>& forest) const;
  bool residual_normalized(const ScalarTransitive& a, const std::vector<Pos>& forest) const;

  // Scalar systems that are 1 on the forest and inside isolated classes.
  std::vector<ScalarTransitive> normalized_scalars(const std::vector<Pos>& forest,
                                                   long long budget = 1'000'000) const;

  // --- order bookkeeping -------------------------------------------------
  BigNat unit_group_order() const;       // invertible elements
  BigNat diagonal_kernel_order() const;  // (p-1)^n
  // |units| * aut0 * scalars / kernel, computed factor-exactly.
  BigNat automorphism_group_order(unsigned long long aut0_count,
                                  const BigNat& scalar_count) const;

 private:
  Preorder rho_;
  QuotientPoset poset_;
  PrimeField field_;
  std::vector<Pos> pairs_;
  std::vector<std::vector<int>> below_;  // below_[j] = all i with i rho j
  std::vector<std::vector<int>> above_;  // above_[i] = all j with i rho j
};

// Exhaustive scan for subspaces of F_2^n stable under every matrix unit of
// the algebra. Each subspace is returned as a 2^n-bit membership mask,
// sorted ascending. Requires n <= 5.
std::vector<std::uint32_t> stable_subspaces_f2(const Preorder& rho);

// Membership mask of the coordinate subspace an antichain carves out of
// F_2^n: spanned by ground coordinates whose class lies under the antichain.
std::uint32_t antichain_subspace_mask_f2(const QuotientPoset& q, Antichain d);

// Exhaustive count of algebra automorphisms by trying every assignment of
// matrix-unit images. Candidate count (p^dim)^dim must stay within budget.
long long count_algebra_automorphisms_bruteforce(const Algebra& alg, long long budget);

}  // namespace structmat
