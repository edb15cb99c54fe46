#include "structmat/field.hpp"

namespace structmat {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > 257 || !is_prime(p))
    throw InputError("field order " + std::to_string(p) + " is not a prime <= 257");
}

int PrimeField::inv(int a) const {
  a %= p_;
  if (a == 0) throw InputError("division by zero in F_" + std::to_string(p_));
  // extended gcd
  int t = 0, newt = 1, r = p_, newr = a;
  while (newr != 0) {
    int q = r / newr;
    int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return (t % p_ + p_) % p_;
}

int PrimeField::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  long long base = a % p_, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return int(acc);
}

}  // namespace structmat
