#pragma once

#include <string>
#include <vector>

#include "structmat/errors.hpp"

namespace structmat {

// Finite group as a validated Cayley table. Element ids are 0..order-1 with
// 0 the identity; construction re-labels if needed and rejects tables that
// fail the axioms, naming a witness triple.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int m);  // m <= 5; elements are perms in lex order
  static FiniteGroup dihedral(int m);   // order 2m
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup from_table(int order, const std::vector<int>& table,
                                const std::string& name = "table");

  int order() const { return order_; }
  int id() const { return 0; }
  int mul(int a, int b) const { return table_[std::size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long long e) const;
  int element_order(int a) const;
  bool abelian() const { return abelian_; }
  bool trivial() const { return order_ == 1; }
  const std::string& name() const { return name_; }

  // Human-readable element label (permutation word for S_m, exponent pair
  // for dihedral, tuple for products, plain index otherwise).
  std::string label(int a) const;

  bool operator==(const FiniteGroup& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  void finish(const std::string& name);  // validates axioms, fills inv_/abelian_

  int order_ = 0;
  std::vector<int> table_;  // Cayley table: table_[a*order+b] = ab
  std::vector<int> inv_;
  bool abelian_ = false;
  std::string name_;
  std::vector<std::string> labels_;
};

// Group spec grammar: atoms Z<m>, S<m> (m<=5), D<m> (order 2m),
// "table:<path>" (whitespace file: order then order^2 entries, 0-based),
// products joined with 'x', e.g. "Z2xZ3". Raises InputError naming the
// offending token.
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace structmat
