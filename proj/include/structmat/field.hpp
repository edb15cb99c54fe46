#pragma once

#include <string>

#include "structmat/errors.hpp"

namespace structmat {

// Prime field F_p with exact arithmetic on canonical representatives 0..p-1.
// p is restricted to primes <= 257; everything downstream assumes exactness,
// so there is no floating point anywhere in the library.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int zero() const { return 0; }
  int one() const { return 1; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }
  int mul(int a, int b) const { return int(1LL * a * b % p_); }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;

  // Canonical representative of an arbitrary integer.
  int reduce(long long a) const { return int((a % p_ + p_) % p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  int p_;
};

bool is_prime(int p);

}  // namespace structmat
