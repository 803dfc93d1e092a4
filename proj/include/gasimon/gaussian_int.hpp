#pragma once

#include <string>
#include <string_view>

#include "gasimon/coefficient.hpp"

namespace gasimon {

/// Exact Gaussian integer a + bi. No rounding ever occurs; every operation
/// is ring arithmetic on arbitrary-precision parts.
struct GaussianInt {
  Coefficient re;
  Coefficient im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(Coefficient r, Coefficient i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianInt real(Coefficient r) { return GaussianInt(std::move(r), 0); }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianInt operator+(const GaussianInt& o) const {
    return GaussianInt(re + o.re, im + o.im);
  }
  GaussianInt operator-(const GaussianInt& o) const {
    return GaussianInt(re - o.re, im - o.im);
  }
  GaussianInt operator*(const GaussianInt& o) const {
    return GaussianInt(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  /// Fused this += a * b, avoiding temporaries in hot loops.
  void add_product(const GaussianInt& a, const GaussianInt& b) {
    re += a.re * b.re;
    re -= a.im * b.im;
    im += a.re * b.im;
    im += a.im * b.re;
  }

  bool operator==(const GaussianInt& o) const = default;

  /// Compact token: "0", "1", "-2", "i", "-i", "2i", "1-i", "-1+2i", ...
  /// An imaginary part of magnitude 1 drops its digit.
  std::string str() const;

  /// Parses exactly the grammar produced by str().
  static GaussianInt parse(std::string_view token);
};

}  // namespace gasimon
