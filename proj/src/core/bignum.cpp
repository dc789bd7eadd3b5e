#include "grr/bignum.hpp"

#include <algorithm>

namespace grr {

BigUint::BigUint(uint64_t v) {
  limbs_ = {static_cast<uint32_t>(v), static_cast<uint32_t>(v >> 32)};
  trim();
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::mul_u64(uint64_t v) {
  uint32_t lo = static_cast<uint32_t>(v);
  uint32_t hi = static_cast<uint32_t>(v >> 32);
  std::vector<uint32_t> out(limbs_.size() + 2, 0);
  auto add_at = [&out](size_t i, uint64_t x) {
    while (x) {
      x += out[i];
      out[i] = static_cast<uint32_t>(x);
      x >>= 32;
      ++i;
    }
  };
  for (size_t i = 0; i < limbs_.size(); ++i) {
    add_at(i, static_cast<uint64_t>(limbs_[i]) * lo);
    if (hi) add_at(i + 1, static_cast<uint64_t>(limbs_[i]) * hi);
  }
  limbs_ = std::move(out);
  trim();
}

bool BigUint::is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

bool BigUint::fits_u64() const { return limbs_.size() <= 2; }

uint64_t BigUint::to_u64() const {
  uint64_t v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
  return v;
}

bool BigUint::equals_u64(uint64_t v) const { return fits_u64() && to_u64() == v; }

std::string BigUint::to_string() const {
  std::vector<uint32_t> work = limbs_;
  std::string digits;
  while (!(work.size() == 1 && work[0] == 0)) {
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
    while (work.size() > 1 && work.back() == 0) work.pop_back();
  }
  if (digits.empty()) digits.push_back('0');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace grr
