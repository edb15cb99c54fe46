#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace structmat {

// Minimal arbitrary-precision natural number: enough for exact group-order
// bookkeeping in reports. Base 1e9 little-endian limbs.
struct BigNat {
  std::vector<std::uint32_t> limbs;  // empty = 0

  static BigNat from_u64(unsigned long long v);
  static BigNat one() { return from_u64(1); }

  bool is_zero() const { return limbs.empty(); }
  BigNat mul(const BigNat& o) const;
  BigNat mul_small(std::uint64_t v) const;
  BigNat add(const BigNat& o) const;
  BigNat pow_u32(std::uint32_t base, std::uint32_t exp) const;  // this * base^exp
  std::string to_string() const;

  bool operator==(const BigNat& o) const { return limbs == o.limbs; }
};

}  // namespace structmat
