#include "gasimon/function_table.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gasimon/rng.hpp"

namespace gasimon {

MaskSpec::MaskSpec(BitString mask) : s(mask) {
  if (s.is_zero()) {
    throw ZeroMaskError("mask must be nonzero");
  }
}

FunctionTable::FunctionTable(int n, int m, std::vector<BitString> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (n < 1 || n > kMaxInputBits) {
    throw RangeError("input bit count must be in [1, 16], got " + std::to_string(n));
  }
  if (m < 1 || m > BitString::kMaxWidth) {
    throw RangeError("output bit count must be in [1, 63], got " + std::to_string(m));
  }
  if (values_.size() != (std::uint64_t(1) << n)) {
    throw ArityError("expected " + std::to_string(std::uint64_t(1) << n) +
                     " entries, got " + std::to_string(values_.size()));
  }
  for (const BitString& v : values_) {
    if (v.width() != m) {
      throw WidthError("table entry width " + std::to_string(v.width()) +
                       " does not match m=" + std::to_string(m));
    }
  }
}

const BitString& FunctionTable::operator()(const BitString& x) const {
  if (x.width() != n_) {
    throw WidthError("argument width " + std::to_string(x.width()) +
                     " does not match n=" + std::to_string(n_));
  }
  return values_[x.value()];
}

std::string FunctionTable::str() const {
  std::string out = "n=" + std::to_string(n_) + " m=" + std::to_string(m_) + "\n";
  for (std::uint64_t x = 0; x < size(); ++x) {
    out += BitString(n_, x).str();
    out += " -> ";
    out += values_[x].str();
    out += '\n';
  }
  return out;
}

nlohmann::json FunctionTable::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const BitString& v : values_) values.push_back(v.str());
  return {{"n", n_}, {"m", m_}, {"values", values}};
}

FunctionTable FunctionTable::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int m = j.at("m").get<int>();
  std::vector<BitString> values;
  for (const auto& v : j.at("values")) {
    values.push_back(BitString::parse(v.get<std::string>()));
  }
  return FunctionTable(n, m, std::move(values));
}

namespace {

bool is_bit_run(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

FunctionTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<BitString> values;
  std::uint64_t expected = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    if (n < 0) {
      // Header: n=<int> m=<int>
      std::istringstream hdr(line);
      std::string ntok, mtok;
      if (!(hdr >> ntok >> mtok) || ntok.rfind("n=", 0) != 0 ||
          mtok.rfind("m=", 0) != 0) {
        throw SyntaxError("expected header 'n=<int> m=<int>'", line_no,
                          static_cast<int>(start) + 1);
      }
      try {
        n = std::stoi(ntok.substr(2));
        m = std::stoi(mtok.substr(2));
      } catch (const std::exception&) {
        throw SyntaxError("header has non-numeric n or m", line_no,
                          static_cast<int>(start) + 1);
      }
      if (n < 1 || n > FunctionTable::kMaxInputBits) {
        throw RangeError("input bit count must be in [1, 16], got " + std::to_string(n));
      }
      expected = std::uint64_t(1) << n;
      continue;
    }

    // Mapping line: <input bits> -> <output bits>
    std::istringstream row(line);
    std::string input, arrow, output;
    if (!(row >> input >> arrow >> output) || arrow != "->") {
      throw SyntaxError("expected '<bits> -> <bits>'", line_no,
                        static_cast<int>(start) + 1);
    }
    if (!is_bit_run(input)) {
      throw SyntaxError("input is not a run of 0/1", line_no,
                        static_cast<int>(line.find(input)) + 1);
    }
    if (!is_bit_run(output)) {
      throw SyntaxError("output is not a run of 0/1", line_no,
                        static_cast<int>(line.find(output)) + 1);
    }
    if (values.size() >= expected) {
      throw ArityError("more than " + std::to_string(expected) + " mapping lines");
    }
    BitString in_bits = BitString::parse(input);
    if (in_bits.width() != n) {
      throw WidthError("input width " + std::to_string(in_bits.width()) +
                       " does not match n=" + std::to_string(n));
    }
    if (in_bits.value() != values.size()) {
      throw SyntaxError("inputs must appear in ascending order; expected " +
                            BitString(n, values.size()).str(),
                        line_no, static_cast<int>(start) + 1);
    }
    BitString out_bits = BitString::parse(output);
    if (out_bits.width() != m) {
      throw WidthError("output width " + std::to_string(out_bits.width()) +
                       " does not match m=" + std::to_string(m));
    }
    values.push_back(out_bits);
  }

  if (n < 0) {
    throw SyntaxError("missing 'n=<int> m=<int>' header", line_no + 1, 1);
  }
  if (values.size() != expected) {
    throw ArityError("expected " + std::to_string(expected) + " mapping lines, got " +
                     std::to_string(values.size()));
  }
  return FunctionTable(n, m, std::move(values));
}

bool has_mask_property(const FunctionTable& f, const MaskSpec& s) {
  if (s.s.width() != f.n()) {
    throw WidthError("mask width " + std::to_string(s.s.width()) +
                     " does not match n=" + std::to_string(f.n()));
  }
  const std::uint64_t size = f.size();
  const std::uint64_t mask = s.s.value();
  // f constant on every coset {x, x xor s} ...
  for (std::uint64_t x = 0; x < size; ++x) {
    if (!(f.value_at(x) == f.value_at(x ^ mask))) return false;
  }
  // ... and distinct across cosets.
  std::vector<std::uint64_t> rep_values;
  rep_values.reserve(size / 2);
  for (std::uint64_t x = 0; x < size; ++x) {
    if (x < (x ^ mask)) rep_values.push_back(f.value_at(x).value());
  }
  std::sort(rep_values.begin(), rep_values.end());
  return std::adjacent_find(rep_values.begin(), rep_values.end()) == rep_values.end();
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::OneToOne: return "OneToOne";
    case OutcomeKind::Masked: return "Masked";
    case OutcomeKind::PromiseViolated: return "PromiseViolated";
  }
  return "?";
}

SimonOutcome SimonOutcome::one_to_one() {
  return SimonOutcome{OutcomeKind::OneToOne, std::nullopt, {}};
}

SimonOutcome SimonOutcome::masked(MaskSpec s, std::vector<Probe> evidence) {
  return SimonOutcome{OutcomeKind::Masked, std::move(s), std::move(evidence)};
}

SimonOutcome SimonOutcome::promise_violated(std::vector<Probe> evidence) {
  return SimonOutcome{OutcomeKind::PromiseViolated, std::nullopt, std::move(evidence)};
}

nlohmann::json SimonOutcome::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  if (mask) j["mask"] = mask->s.str();
  nlohmann::json probes = nlohmann::json::array();
  for (const Probe& p : evidence) {
    probes.push_back({{"blade", p.blade.str()}, {"coeff", p.coeff.str()}});
  }
  j["probes"] = probes;
  return j;
}

SimonOutcome SimonOutcome::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<Probe> evidence;
  for (const auto& p : j.at("probes")) {
    evidence.push_back(Probe{BitString::parse(p.at("blade").get<std::string>()),
                             Coefficient(p.at("coeff").get<std::string>())});
  }
  if (kind == "OneToOne") {
    SimonOutcome out = one_to_one();
    out.evidence = std::move(evidence);
    return out;
  }
  if (kind == "Masked") {
    return masked(MaskSpec(BitString::parse(j.at("mask").get<std::string>())),
                  std::move(evidence));
  }
  if (kind == "PromiseViolated") {
    return promise_violated(std::move(evidence));
  }
  throw SyntaxError("unknown outcome kind '" + kind + "'", 1, 1);
}

SimonOutcome brute_force_solve(const FunctionTable& f) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> preimages;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    preimages[f.value_at(x).value()].push_back(x);
  }

  bool any_collision = false;
  std::optional<std::uint64_t> offset;
  for (const auto& [value, xs] : preimages) {
    if (xs.size() == 1) continue;
    if (xs.size() > 2) return SimonOutcome::promise_violated();
    any_collision = true;
    std::uint64_t d = xs[0] ^ xs[1];
    if (offset && *offset != d) return SimonOutcome::promise_violated();
    offset = d;
  }

  if (!any_collision) return SimonOutcome::one_to_one();
  // A single shared offset still requires every x to collide with x xor s.
  if (preimages.size() != f.size() / 2) return SimonOutcome::promise_violated();
  return SimonOutcome::masked(MaskSpec(BitString(f.n(), *offset)));
}

namespace {

// Deterministic choice of `count` distinct values from [0, 2^m) by a
// partial Fisher-Yates pass over the full value range.
std::vector<std::uint64_t> seeded_injection(int m, std::uint64_t count,
                                            SplitMix64& rng) {
  const std::uint64_t range = std::uint64_t(1) << m;
  std::vector<std::uint64_t> pool(range);
  for (std::uint64_t v = 0; v < range; ++v) pool[v] = v;
  std::vector<std::uint64_t> picked(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t j = i + rng.below(range - i);
    std::swap(pool[i], pool[j]);
    picked[i] = pool[i];
  }
  return picked;
}

}  // namespace

FunctionTable generate_one_to_one(int n, int m, std::uint64_t seed) {
  if (n < 1 || n > FunctionTable::kMaxInputBits) {
    throw RangeError("input bit count must be in [1, 16], got " + std::to_string(n));
  }
  if (m < n) {
    throw CapacityError("injective table needs m >= n, got n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
  }
  SplitMix64 rng(seed);
  const std::uint64_t size = std::uint64_t(1) << n;
  std::vector<std::uint64_t> image = seeded_injection(m, size, rng);
  std::vector<BitString> values;
  values.reserve(size);
  for (std::uint64_t x = 0; x < size; ++x) values.emplace_back(m, image[x]);
  return FunctionTable(n, m, std::move(values));
}

FunctionTable generate_masked(int n, int m, const MaskSpec& s, std::uint64_t seed) {
  if (n < 1 || n > FunctionTable::kMaxInputBits) {
    throw RangeError("input bit count must be in [1, 16], got " + std::to_string(n));
  }
  if (s.s.width() != n) {
    throw WidthError("mask width " + std::to_string(s.s.width()) +
                     " does not match n=" + std::to_string(n));
  }
  if (m < n - 1) {
    throw CapacityError("masked table needs m >= n-1, got n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
  }
  SplitMix64 rng(seed);
  const std::uint64_t size = std::uint64_t(1) << n;
  const std::uint64_t mask = s.s.value();
  std::vector<std::uint64_t> image = seeded_injection(m, size / 2, rng);

  std::vector<std::optional<BitString>> slots(size);
  std::uint64_t next_value = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (slots[x]) continue;  // already filled as a coset partner
    BitString v(m, image[next_value++]);
    slots[x] = v;
    slots[x ^ mask] = v;
  }
  std::vector<BitString> values;
  values.reserve(size);
  for (std::uint64_t x = 0; x < size; ++x) values.push_back(*slots[x]);
  return FunctionTable(n, m, std::move(values));
}

}  // namespace gasimon
