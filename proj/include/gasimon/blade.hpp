#pragma once

#include "gasimon/bitstring.hpp"

namespace gasimon {

/// A basis blade together with its accumulated sign. The sign is always
/// exactly +1 or -1, never zero: every generator squares to +1.
struct SignedBlade {
  int sign;
  BitString index;

  bool operator==(const SignedBlade&) const = default;
};

/// Parity of sum over ordered position pairs i < j of low_i * high_j,
/// positions counted from 1 at the left. This single exponent drives the
/// product sign, the reverse sign, and the zero-pattern readout law.
int pair_parity(const BitString& low, const BitString& high);

/// Sign of the blade product e_X e_Y: (-1) to the sum over i < j of
/// Y_i X_j. Throws WidthError on width mismatch.
int product_sign(const BitString& x, const BitString& y);

/// Full blade product e_X e_Y = sign * e_(X xor Y).
SignedBlade blade_product(const BitString& x, const BitString& y);

/// Sign picked up by reversing the generator order of e_X:
/// (-1) to the sum over i < j of X_i X_j, i.e. (-1)^(k(k-1)/2) at grade k.
int reverse_sign(const BitString& x);

/// Number of generators in the blade (popcount of the index).
int grade(const BitString& x);

}  // namespace gasimon
