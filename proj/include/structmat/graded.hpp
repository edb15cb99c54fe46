#pragma once

#include <map>
#include <optional>
#include <vector>

#include "structmat/algebra.hpp"
#include "structmat/grading.hpp"

namespace structmat {

// Degree assignment to the flag basis: one group element per ground index.
struct GradingTuple {
  std::vector<int> degrees;

  bool operator==(const GradingTuple& o) const { return degrees == o.degrees; }
  bool operator<(const GradingTuple& o) const { return degrees < o.degrees; }
};

// The grading a degree tuple induces on matrix units: deg e_ij = h_i h_j^{-1}.
TransitiveLabeling grading_from_tuple(const Preorder& rho, const FiniteGroup& g,
                                      const GradingTuple& h);

// Homogeneous pieces of an element under the induced grading.
std::map<int, StructMatrix> graded_components(const Algebra& alg, const FiniteGroup& g,
                                              const GradingTuple& h, const StructMatrix& x);

enum class Side { Left, Right };

// Degree shift on one component of the class poset: right replaces h_i by
// h_i s^{-1}, left by s^{-1} h_i, for ground indices in that component.
GradingTuple suspend(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                     int component, int s, Side side);

// An element of the relabeling group acting on degree tuples:
// per-class position permutations, a class-size-preserving order
// automorphism, and one shift per component.
struct ActionElement {
  std::vector<std::vector<int>> young;  // per class: permutation of member positions
  PosetAutomorphism aut;
  std::vector<int> shifts;  // per component, group element ids
};

ActionElement identity_action(const QuotientPoset& q);
// Component relabeling induced by an order automorphism.
std::vector<int> component_permutation(const QuotientPoset& q, const PosetAutomorphism& g);

ActionElement action_multiply(const QuotientPoset& q, const FiniteGroup& g,
                              const ActionElement& a, const ActionElement& b);
ActionElement action_inverse(const QuotientPoset& q, const FiniteGroup& g,
                             const ActionElement& a);

// Right action: Young part, then automorphism, then shifts.
GradingTuple act(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                 const ActionElement& a);

// Componentwise multiset test for graded-flag isomorphism along g, with an
// optional shift tuple (indexed by source component).
bool graded_flag_isomorphic(const QuotientPoset& q, const FiniteGroup& g,
                            const GradingTuple& h, const GradingTuple& hp,
                            const PosetAutomorphism& aut, const std::vector<int>* shifts);

struct IsoWitness {
  bool iso = false;
  PosetAutomorphism aut;
  std::vector<int> shifts;
};
// Searches automorphisms x shift tuples for a graded isomorphism between the
// induced endomorphism gradings.
IsoWitness end_graded_iso(const QuotientPoset& q, const FiniteGroup& g, const GradingTuple& h,
                          const GradingTuple& hp, long long budget = 1'000'000);

struct OrbitClassification {
  long long total = 0;                        // |G|^n tuples
  std::vector<GradingTuple> representatives;  // lexicographically least per orbit
  std::vector<long long> orbit_sizes;
  std::vector<int> orbit_of;                  // tuple index -> orbit index
};
// Orbit enumeration of the relabeling group on all degree tuples by closure
// under generators; orbits are listed by ascending least member.
OrbitClassification classify_orbits(const QuotientPoset& q, const FiniteGroup& g,
                                    long long budget = 1'000'000);

// Degree-tuple index helpers (mixed radix, position 0 most significant).
long long tuple_index(const FiniteGroup& g, const GradingTuple& h);
GradingTuple tuple_from_index(const FiniteGroup& g, int n, long long idx);

}  // namespace structmat
