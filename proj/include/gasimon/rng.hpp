#pragma once

#include <cstdint>

namespace gasimon {

/// Fixed 64-bit mixing generator (splitmix64). The update is frozen so that
/// any port of this tool reproduces identical tables and measurement
/// sequences from identical seeds; see README for the exact recurrence.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound). bound must be positive. The residue bias
  /// is below 2^-47 for every bound used here (bounds never exceed 2^16).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

}  // namespace gasimon
