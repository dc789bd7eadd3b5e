#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grr {

// Unsigned big integer, just large enough for automorphism-group orders
// (products of small factors). Little-endian base 2^32 limbs.
class BigUint {
public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v);

  void mul_u64(uint64_t v);

  bool is_zero() const;
  bool fits_u64() const;
  uint64_t to_u64() const;  // requires fits_u64()
  std::string to_string() const;

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
  bool equals_u64(uint64_t v) const;

private:
  void trim();
  std::vector<uint32_t> limbs_;
};

}  // namespace grr
