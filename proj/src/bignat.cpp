#include "structmat/bignat.hpp"

namespace structmat {

namespace {
constexpr std::uint64_t kBase = 1'000'000'000ULL;
}

BigNat BigNat::from_u64(unsigned long long v) {
  BigNat r;
  while (v > 0) {
    r.limbs.push_back(std::uint32_t(v % kBase));
    v /= kBase;
  }
  return r;
}

BigNat BigNat::mul_small(std::uint64_t v) const {
  BigNat r;
  if (v == 0 || is_zero()) return r;
  std::uint64_t carry = 0;
  for (std::uint32_t limb : limbs) {
    // v < 2^32 keeps limb*v + carry within 64 bits
    std::uint64_t cur = std::uint64_t(limb) * v + carry;
    r.limbs.push_back(std::uint32_t(cur % kBase));
    carry = cur / kBase;
  }
  while (carry > 0) {
    r.limbs.push_back(std::uint32_t(carry % kBase));
    carry /= kBase;
  }
  return r;
}

BigNat BigNat::add(const BigNat& o) const {
  BigNat r;
  std::uint64_t carry = 0;
  std::size_t n = std::max(limbs.size(), o.limbs.size());
  for (std::size_t k = 0; k < n || carry; ++k) {
    std::uint64_t cur = carry;
    if (k < limbs.size()) cur += limbs[k];
    if (k < o.limbs.size()) cur += o.limbs[k];
    r.limbs.push_back(std::uint32_t(cur % kBase));
    carry = cur / kBase;
  }
  return r;
}

BigNat BigNat::mul(const BigNat& o) const {
  BigNat r;
  if (is_zero() || o.is_zero()) return r;
  r.limbs.assign(limbs.size() + o.limbs.size(), 0);
  for (std::size_t i = 0; i < limbs.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs.size() || carry; ++j) {
      std::uint64_t cur = r.limbs[i + j] + carry;
      if (j < o.limbs.size()) cur += std::uint64_t(limbs[i]) * o.limbs[j];
      r.limbs[i + j] = std::uint32_t(cur % kBase);
      carry = cur / kBase;
    }
  }
  while (!r.limbs.empty() && r.limbs.back() == 0) r.limbs.pop_back();
  return r;
}

BigNat BigNat::pow_u32(std::uint32_t base, std::uint32_t exp) const {
  BigNat r = *this;
  for (std::uint32_t k = 0; k < exp; ++k) r = r.mul_small(base);
  return r;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  std::string s = std::to_string(limbs.back());
  for (std::size_t k = limbs.size() - 1; k-- > 0;) {
    std::string part = std::to_string(limbs[k]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

}  // namespace structmat
