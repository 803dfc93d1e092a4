#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gasimon/errors.hpp"

namespace gasimon {

/// Fixed-width binary word. Position 1 is the leftmost character of the
/// textual form and the most significant bit of the packed word, so the
/// packed value of "10" is 2. Width is immutable and capped at 63 so an
/// index always fits one machine word.
class BitString {
public:
  static constexpr int kMaxWidth = 63;

  BitString(int width, std::uint64_t bits);

  /// Parses a string of '0'/'1' characters; the width is its length.
  static BitString parse(std::string_view text);

  /// All-zero word of the given width.
  static BitString zeros(int width) { return BitString(width, 0); }

  int width() const { return width_; }
  std::uint64_t value() const { return bits_; }

  /// Bit at 1-based position `pos` (1 = leftmost).
  int bit(int pos) const;

  bool is_zero() const { return bits_ == 0; }
  int popcount() const;

  /// Textual form: '0'/'1' characters, position 1 first.
  std::string str() const;

  /// Componentwise addition mod 2. Throws WidthError on width mismatch.
  BitString operator^(const BitString& other) const;

  /// Concatenation: *this becomes the leading positions.
  BitString concat(const BitString& tail) const;

  /// Leading `count` positions as a narrower word.
  BitString prefix(int count) const;
  /// Trailing `count` positions as a narrower word.
  BitString suffix(int count) const;

  bool operator==(const BitString& other) const = default;
  /// Orders by width, then by packed value; keys of one multivector share
  /// a width, so within it this is plain numeric order.
  auto operator<=>(const BitString& other) const = default;

private:
  int width_;
  std::uint64_t bits_;
};

/// Mod-2 dot product of two equal-width words.
int dot_mod2(const BitString& a, const BitString& b);

/// Throws WidthError unless both operands share a width.
void require_same_width(const BitString& a, const BitString& b);

}  // namespace gasimon
