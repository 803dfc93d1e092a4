#include "gasimon/blade.hpp"

#include <bit>

namespace gasimon {

int pair_parity(const BitString& low, const BitString& high) {
  require_same_width(low, high);
  // Position i < j maps to machine bit (width - i) > (width - j): for each
  // set bit of `high`, count the `low` bits strictly above it.
  int sum = 0;
  std::uint64_t h = high.value();
  const std::uint64_t l = low.value();
  while (h != 0) {
    int b = std::countr_zero(h);
    sum += std::popcount(l >> (b + 1));
    h &= h - 1;
  }
  return sum & 1;
}

int product_sign(const BitString& x, const BitString& y) {
  return pair_parity(y, x) ? -1 : +1;
}

SignedBlade blade_product(const BitString& x, const BitString& y) {
  return SignedBlade{product_sign(x, y), x ^ y};
}

int reverse_sign(const BitString& x) { return pair_parity(x, x) ? -1 : +1; }

int grade(const BitString& x) { return x.popcount(); }

}  // namespace gasimon
