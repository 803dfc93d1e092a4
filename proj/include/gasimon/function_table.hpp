#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gasimon/bitstring.hpp"
#include "gasimon/coefficient.hpp"

namespace gasimon {

/// Nonzero hidden-mask candidate of width n. Constructing a zero mask
/// throws ZeroMaskError.
struct MaskSpec {
  explicit MaskSpec(BitString mask);

  BitString s;

  bool operator==(const MaskSpec&) const = default;
};

/// The promise function f: {0,1}^n -> {0,1}^m as an explicit table.
/// Entry x (read as an integer, position 1 most significant) is f(x).
class FunctionTable {
public:
  static constexpr int kMaxInputBits = 16;

  FunctionTable(int n, int m, std::vector<BitString> values);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t size() const { return std::uint64_t(1) << n_; }

  const BitString& value_at(std::uint64_t x) const { return values_[x]; }
  const BitString& operator()(const BitString& x) const;

  bool operator==(const FunctionTable&) const = default;

  /// External text format, bit-exact:
  ///   # comment
  ///   n=3 m=2
  ///   000 -> 11
  ///   ...          (exactly 2^n lines, inputs ascending)
  std::string str() const;

  nlohmann::json to_json() const;
  static FunctionTable from_json(const nlohmann::json& j);

private:
  int n_;
  int m_;
  std::vector<BitString> values_;
};

/// Parses the text format above. Throws SyntaxError (with line/column),
/// ArityError (wrong entry count) or WidthError.
FunctionTable parse_table(std::string_view text);

/// True iff for all x != y: f(x) = f(y) exactly when x = y xor s.
bool has_mask_property(const FunctionTable& f, const MaskSpec& s);

enum class OutcomeKind { OneToOne, Masked, PromiseViolated };

std::string to_string(OutcomeKind kind);

/// One blade probed during readout together with its observed coefficient.
struct Probe {
  BitString blade;
  Coefficient coeff;

  bool operator==(const Probe&) const = default;
};

/// Answer to the hidden-mask problem. The mask is present exactly when
/// kind is Masked; evidence lists the blades used in readout, if any.
struct SimonOutcome {
  OutcomeKind kind;
  std::optional<MaskSpec> mask;
  std::vector<Probe> evidence;

  static SimonOutcome one_to_one();
  static SimonOutcome masked(MaskSpec s, std::vector<Probe> evidence = {});
  static SimonOutcome promise_violated(std::vector<Probe> evidence = {});

  bool operator==(const SimonOutcome&) const = default;

  nlohmann::json to_json() const;
  static SimonOutcome from_json(const nlohmann::json& j);
};

/// Classical oracle: scans all value collisions. OneToOne when there are
/// none, Masked(s) when every collision shares one nonzero XOR offset s
/// that satisfies the promise, PromiseViolated otherwise.
SimonOutcome brute_force_solve(const FunctionTable& f);

/// Deterministic injective table; requires m >= n (CapacityError below).
FunctionTable generate_one_to_one(int n, int m, std::uint64_t seed);

/// Deterministic table with hidden mask s: coset representatives are
/// enumerated in ascending integer order, assigned a seeded random
/// injection into {0,1}^m, and each value is copied to the partner x xor s.
/// Requires m >= n-1 (CapacityError below).
FunctionTable generate_masked(int n, int m, const MaskSpec& s, std::uint64_t seed);

}  // namespace gasimon
