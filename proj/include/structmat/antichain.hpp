#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "structmat/preorder.hpp"

namespace structmat {

// Antichain of the class poset, as a bitmask over class indices. Masks keep
// the whole lattice machinery allocation-free; the class count is capped well
// below 32 (enumeration is Dedekind-scale, the default cap is 20).
using Antichain = std::uint32_t;

inline constexpr int kDefaultClassCap = 20;

bool is_antichain(const QuotientPoset& q, Antichain d);

// All antichains, ordered by increasing popcount then by mask value.
// Throws BudgetExceeded when q.q exceeds `class_cap` or the result would
// exceed `count_budget`.
std::vector<Antichain> enumerate_antichains(const QuotientPoset& q,
                                            int class_cap = kDefaultClassCap,
                                            long long count_budget = 1'000'000);

// D <= E  iff every member of D lies below some member of E.
bool antichain_leq(const QuotientPoset& q, Antichain d, Antichain e);

// Lattice operations: meet via lower-set intersection + maximal elements,
// join via maximal elements of the union.
Antichain antichain_meet(const QuotientPoset& q, Antichain d, Antichain e);
Antichain antichain_join(const QuotientPoset& q, Antichain d, Antichain e);

// Lower set of an antichain, as a class mask.
Antichain lower_set(const QuotientPoset& q, Antichain d);

// Order automorphism of the class poset. map[a] = image class of a.
struct PosetAutomorphism {
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  bool is_identity() const;
};

PosetAutomorphism identity_automorphism(int q);
PosetAutomorphism compose(const PosetAutomorphism& h, const PosetAutomorphism& g);  // h after g
PosetAutomorphism inverse(const PosetAutomorphism& g);

// All order automorphisms, optionally filtered to the class-size-preserving
// subgroup. Sorted lexicographically by map vector (identity first).
std::vector<PosetAutomorphism> poset_automorphisms(const QuotientPoset& q,
                                                   bool multiplicity_preserving);

// Image antichain under the induced lattice map: apply g memberwise.
Antichain apply_to_antichain(const PosetAutomorphism& g, Antichain d);

// Decomposition of a lattice automorphism as the induced map of a poset
// automorphism. `f` maps indices into `antichains` (the enumerate_antichains
// order). Validates that f is an order automorphism of the lattice, then
// peels heights to extract g and verifies f == induced(g) on every antichain.
struct LatticeDecomposition {
  bool ok = false;
  PosetAutomorphism g;                                   // valid when ok
  std::optional<std::pair<Antichain, Antichain>> witness; // violation when !ok
  std::string reason;
};

LatticeDecomposition lattice_automorphism_decompose(const QuotientPoset& q,
                                                    const std::vector<Antichain>& antichains,
                                                    const std::vector<int>& f);

}  // namespace structmat
