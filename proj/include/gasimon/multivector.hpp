#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gasimon/bitstring.hpp"
#include "gasimon/blade.hpp"
#include "gasimon/coefficient.hpp"

namespace gasimon {

/// Sparse exact-integer linear combination of blades. Zero coefficients are
/// never stored, all keys share one width, and equality is key-by-key
/// coefficient equality. Terms iterate in ascending blade order, which the
/// serializers rely on for canonical output.
class Multivector {
public:
  using TermMap = std::map<BitString, Coefficient>;

  explicit Multivector(int width);

  /// Single-term multivector c * e_index.
  static Multivector blade(const BitString& index, Coefficient coeff = 1);

  /// The scalar blade e_{0...0} of the given width.
  static Multivector scalar_one(int width);

  int width() const { return width_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  /// Stored coefficient of e_index, or 0. Throws WidthError on mismatch.
  Coefficient coefficient(const BitString& index) const;

  /// Adds c * e_index, pruning the term if it cancels to zero.
  void add_term(const BitString& index, const Coefficient& coeff);

  Multivector operator+(const Multivector& other) const;
  Multivector operator-(const Multivector& other) const;

  /// Scalar multiple; scaling by 0 yields the empty multivector.
  Multivector scaled(const Coefficient& factor) const;

  /// Geometric product: sign-weighted blade products of all key pairs,
  /// like terms collected, zeros pruned.
  Multivector operator*(const Multivector& other) const;

  /// Reversal anti-automorphism: each term picks up reverse_sign(key).
  Multivector reversed() const;

  /// Sum of squared coefficients.
  Coefficient norm_sq() const;

  bool operator==(const Multivector& other) const = default;

  /// Canonical text form, terms in ascending blade order:
  /// "+1*e[0000] +2*e[0101] -1*e[1000]". The empty multivector prints "0".
  std::string str() const;

  /// JSON array form [{"blade":"0000","coeff":"1"}, ...] with coefficients
  /// as decimal strings, terms ascending.
  nlohmann::json to_json() const;
  static Multivector from_json(const nlohmann::json& j);

private:
  int width_;
  TermMap terms_;
};

inline Multivector reverse(const Multivector& m) { return m.reversed(); }
inline Coefficient norm_sq(const Multivector& m) { return m.norm_sq(); }

}  // namespace gasimon
