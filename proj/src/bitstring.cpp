#include "gasimon/bitstring.hpp"

#include <bit>

namespace gasimon {

BitString::BitString(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxWidth) {
    throw RangeError("bit string width must be in [1, 63], got " +
                     std::to_string(width));
  }
  if (width < 64 && (bits >> width) != 0) {
    throw RangeError("bit value " + std::to_string(bits) +
                     " does not fit width " + std::to_string(width));
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWidth)) {
    throw RangeError("bit string literal must have 1..63 characters");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw SyntaxError(std::string("invalid bit character '") + c + "'", 1,
                        static_cast<int>(&c - text.data()) + 1);
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), bits);
}

int BitString::bit(int pos) const {
  if (pos < 1 || pos > width_) {
    throw RangeError("bit position " + std::to_string(pos) +
                     " out of range for width " + std::to_string(width_));
  }
  return static_cast<int>((bits_ >> (width_ - pos)) & 1u);
}

int BitString::popcount() const { return std::popcount(bits_); }

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int pos = 1; pos <= width_; ++pos) {
    if ((bits_ >> (width_ - pos)) & 1u) out[static_cast<std::size_t>(pos - 1)] = '1';
  }
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  require_same_width(*this, other);
  return BitString(width_, bits_ ^ other.bits_);
}

BitString BitString::concat(const BitString& tail) const {
  int total = width_ + tail.width_;
  if (total > kMaxWidth) {
    throw RangeError("concatenated width " + std::to_string(total) +
                     " exceeds 63");
  }
  return BitString(total, (bits_ << tail.width_) | tail.bits_);
}

BitString BitString::prefix(int count) const {
  if (count < 1 || count > width_) {
    throw RangeError("prefix length out of range");
  }
  return BitString(count, bits_ >> (width_ - count));
}

BitString BitString::suffix(int count) const {
  if (count < 1 || count > width_) {
    throw RangeError("suffix length out of range");
  }
  std::uint64_t mask = (count == 64) ? ~0ull : ((1ull << count) - 1);
  return BitString(count, bits_ & mask);
}

int dot_mod2(const BitString& a, const BitString& b) {
  require_same_width(a, b);
  return std::popcount(a.value() & b.value()) & 1;
}

void require_same_width(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw WidthError("width mismatch: " + std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()));
  }
}

}  // namespace gasimon
