#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "structmat/group.hpp"
#include "structmat/intmat.hpp"
#include "structmat/preorder.hpp"

namespace structmat {

// Group labels on every related pair; the composition law u(i,j)u(j,r) =
// u(i,r) is exactly what makes deg(e_ij) = u(i,j) a grading of the algebra.
struct TransitiveLabeling {
  std::map<std::pair<int, int>, int> values;

  int at(int i, int j) const { return values.at({i, j}); }
  bool operator==(const TransitiveLabeling& o) const { return values == o.values; }
};

// Group labels on the cover arrows of the class poset.
struct ArrowLabeling {
  std::vector<int> values;  // indexed like QuotientPoset::hasse
};

struct TransitiveCheck {
  bool ok = false;
  std::array<int, 3> witness{-1, -1, -1};  // (i,j,r) violating composition
};
TransitiveCheck check_transitive(const Preorder& rho, const FiniteGroup& g,
                                 const TransitiveLabeling& u);

// Weights g_i with u(i,j) = g_i g_j^{-1}, found by spanning-forest
// propagation and full verification; complete for arbitrary groups.
struct TrivialityWitness {
  bool trivial = false;
  std::vector<int> weights;
};
TrivialityWitness triviality_witness(const Preorder& rho, const FiniteGroup& g,
                                     const TransitiveLabeling& u);

// All label products along directed cover paths agree between any two
// endpoints.
bool path_consistent(const QuotientPoset& q, const FiniteGroup& g, const ArrowLabeling& v);

// Class weights f with v(a) = f(source) f(target)^{-1}, if any.
std::optional<std::vector<int>> arrow_weights(const QuotientPoset& q, const FiniteGroup& g,
                                              const ArrowLabeling& v);

// Fundamental cycles of the undirected cover graph w.r.t. a BFS forest.
struct CycleBasis {
  std::vector<int> tree_arrows;
  std::vector<int> nontree_arrows;
  std::vector<std::vector<int>> vectors;  // per nontree arrow, signed arrow coefficients
};
CycleBasis fundamental_cycles(const QuotientPoset& q);

struct CycleStep {
  int arrow = -1;
  int dir = 0;  // +1 along the arrow, -1 against it
};
struct CycleTestResult {
  bool ok = false;
  std::vector<CycleStep> failing_cycle;  // empty when ok
};
// Whether the labeling extends to class weights; the offending fundamental
// cycle is reported otherwise. Agreement with direct cycle-product
// evaluation is asserted for abelian groups.
CycleTestResult cycle_test(const QuotientPoset& q, const FiniteGroup& g, const ArrowLabeling& v);

enum class Verdict { True, False, Undecided };

struct GroupTrivialityScan {
  Verdict verdict = Verdict::Undecided;
  long long consistent = -1;  // path-consistent labelings (-1: not counted)
  long long trivial = -1;
  std::optional<TransitiveLabeling> counterexample;  // least nontrivial, lifted to rho
};
// Decides whether every G-valued transitive labeling is induced by vertex
// weights, by enumerating path-consistent cover labelings. Forest cover
// graphs short-circuit to True. jobs > 1 splits the scan deterministically.
GroupTrivialityScan all_trivial_for_group(const Preorder& rho, const QuotientPoset& q,
                                          const FiniteGroup& g, long long budget = 1'000'000,
                                          int jobs = 1);

// Obstruction to triviality against every abelian group: the quotient of the
// cycle lattice by the parallel-path relations, presented by its invariant
// factors.
struct AbelianReport {
  bool all_trivial = false;
  int cycle_rank = 0;              // independent cycles of the cover graph
  int free_rank = 0;               // Z-rank of the obstruction quotient
  std::vector<long long> torsion;  // invariant factors > 1
};
AbelianReport all_trivial_abelian(const QuotientPoset& q, long long budget = 1'000'000);

// Per-group verdict from the abelian obstruction; requires an abelian group.
bool abelian_group_verdict(const AbelianReport& r, const FiniteGroup& g);

// Signed arrow-coefficient vectors of parallel-path differences (one base
// path per endpoint pair). Budget bounds the number of enumerated paths.
std::vector<std::vector<int>> parallel_path_differences(const QuotientPoset& q,
                                                        long long budget = 1'000'000);

}  // namespace structmat
