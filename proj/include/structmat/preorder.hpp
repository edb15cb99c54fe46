#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "structmat/errors.hpp"

namespace structmat {

// Reflexive transitive relation rho on {0,..,n-1}, stored as a dense n x n
// incidence table. All indices in the library are 0-based; the text and JSON
// front ends speak 1-based and convert at the boundary.
struct Preorder {
  int n = 0;
  std::vector<std::uint8_t> rel;  // rel[i*n+j] != 0  iff  i rho j

  bool leq(int i, int j) const { return rel[std::size_t(i) * n + j] != 0; }
  std::vector<std::pair<int, int>> pairs() const;        // all related pairs
  std::vector<std::pair<int, int>> strict_pairs() const; // i rho j, i != j
};

struct ClosureResult {
  Preorder preorder;
  bool was_closed = false;  // input already reflexive and transitive
  int added = 0;            // pairs added by the closure (incl. diagonal)
};

// Builds the preorder generated by `pairs` (0-based). Out-of-range indices
// raise InputError naming the offending pair. Reflexivity and transitivity
// are completed rather than rejected; `was_closed` records whether the input
// needed any completion.
ClosureResult make_preorder(int n, const std::vector<std::pair<int, int>>& pairs);

// Quotient of a preorder by mutual comparability, with the derived
// combinatorics every other module consumes:
//   classes  : partition of the ground set, ordered by ascending minimum
//   leq      : induced partial order on classes
//   hasse    : cover arrows (a,b), a covered-by b, in lexicographic order
//   comp     : connected component id per class (components of the
//              undirected Hasse shadow), numbered by first appearance
//   height   : peeling depth per class (minimal elements first)
//   mult     : class sizes
struct QuotientPoset {
  int q = 0;                                  // number of classes
  int n = 0;                                  // ground set size
  int components = 0;
  std::vector<std::vector<int>> classes;      // each sorted ascending
  std::vector<std::uint8_t> leq_table;        // q x q
  std::vector<std::pair<int, int>> hasse;
  std::vector<int> class_of;                  // ground element -> class
  std::vector<int> comp;                      // class -> component
  std::vector<int> height;                    // class -> height
  std::vector<int> mult;                      // class -> size

  bool leq(int a, int b) const { return leq_table[std::size_t(a) * q + b] != 0; }
  bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
};

std::vector<std::vector<int>> equivalence_classes(const Preorder& p);
QuotientPoset quotient_order(const Preorder& p);

// Recomputes component ids and peeling heights for an arbitrary class-level
// order table (used standalone by tests; quotient_order calls it internally).
void components_and_heights(QuotientPoset& q);

// Text front end. Format: first non-comment line "n <count>", then one
// "i j" pair per line, 1-based, '#' starts a comment. A leading '{' switches
// to JSON: {"n": int, "pairs": [[i,j], ...]}.
ClosureResult parse_preorder(const std::string& content);
ClosureResult load_preorder_file(const std::string& path);
std::string format_preorder(const Preorder& p);  // text form, closed pair list

}  // namespace structmat
