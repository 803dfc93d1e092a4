#include "gasimon/simon.hpp"

namespace gasimon {

namespace {

void check_register_shape(int n, int m) {
  if (n < 1) throw RangeError("first register needs n >= 1");
  if (m < 0) throw RangeError("second register needs m >= 0");
  if (n + m > BitString::kMaxWidth) {
    throw RangeError("total width n+m = " + std::to_string(n + m) + " exceeds 63");
  }
}

}  // namespace

Multivector build_En(int n, int m) {
  check_register_shape(n, m);
  Multivector out(n + m);
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    out.add_term(BitString(n + m, a << m), 1);
  }
  return out;
}

Multivector build_Fn(int n, int m) {
  check_register_shape(n, m);
  Multivector out(n + m);
  for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
    BitString index(n + m, b << m);
    out.add_term(index, reverse_sign(index));
  }
  return out;
}

Multivector apply_Uf(const FunctionTable& f, const Multivector& state) {
  const int n = f.n();
  const int m = f.m();
  if (state.width() != n + m) {
    throw WidthError("state width " + std::to_string(state.width()) +
                     " does not match n+m=" + std::to_string(n + m));
  }
  const std::uint64_t tail_mask = (std::uint64_t(1) << m) - 1;
  Multivector out(n + m);
  for (const auto& [index, coeff] : state) {
    if (index.value() & tail_mask) {
      throw OracleDomainError("blade e[" + index.str() +
                              "] has nonzero bits in the output register");
    }
    std::uint64_t a = index.value() >> m;
    out.add_term(BitString(n + m, index.value() | f.value_at(a).value()), coeff);
  }
  return out;
}

PipelineTrace run_pipeline(const FunctionTable& f) {
  check_register_shape(f.n(), f.m());
  Multivector initial = Multivector::scalar_one(f.n() + f.m());
  Multivector after_En = build_En(f.n(), f.m()) * initial;
  Multivector after_Uf = apply_Uf(f, after_En);
  Multivector final = build_Fn(f.n(), f.m()) * after_Uf;
  return PipelineTrace{std::move(initial), std::move(after_En),
                       std::move(after_Uf), std::move(final)};
}

Coefficient analytic_amplitude(const BitString& x, const BitString& a,
                               const MaskSpec& s) {
  require_same_width(x, a);
  require_same_width(x, s.s);
  BitString b = x ^ a;
  int leading = (pair_parity(b, b) ^ pair_parity(a, b)) ? -1 : +1;
  int bracket = (pair_parity(b, s.s) ^ pair_parity(a, s.s)) ? 0 : 2;
  return Coefficient(leading * bracket);
}

OutcomeKind classify(const Multivector& final) {
  if (final.empty()) return OutcomeKind::PromiseViolated;
  bool all_one = true;
  bool all_two = true;
  for (const auto& [index, coeff] : final) {
    Coefficient mag = coeff < 0 ? Coefficient(-coeff) : coeff;
    all_one = all_one && mag == 1;
    all_two = all_two && mag == 2;
  }
  if (all_one) return OutcomeKind::OneToOne;
  if (all_two) return OutcomeKind::Masked;
  return OutcomeKind::PromiseViolated;
}

MaskSpec recover_mask(const Multivector& final, const FunctionTable& f,
                      std::vector<Probe>* probes) {
  const int n = f.n();
  const int m = f.m();

  if (n == 1) {
    // No adjacent-ones blade exists; the only candidate mask is 1, which
    // holds exactly when f(0) = f(1).
    MaskSpec candidate{BitString(1, 1)};
    if (has_mask_property(f, candidate)) return candidate;
    throw ReadoutError("width-1 table has no mask");
  }

  const std::uint64_t tail = f.value_at(0).value();  // y* = f(0...0)
  std::uint64_t suffix_bits = 0;                     // S_2 .. S_n
  for (int k = 0; k <= n - 2; ++k) {
    // Ones at first-register positions k+1 and k+2.
    std::uint64_t first = (std::uint64_t(3) << (n - k - 2)) << m;
    BitString blade(n + m, first | tail);
    Coefficient c = final.coefficient(blade);
    if (probes) probes->push_back(Probe{blade, c});
    if (c == 0) suffix_bits |= std::uint64_t(1) << (n - (k + 2));
  }

  for (std::uint64_t lead : {std::uint64_t(0), std::uint64_t(1)}) {
    std::uint64_t bits = (lead << (n - 1)) | suffix_bits;
    if (bits == 0) continue;
    MaskSpec candidate{BitString(n, bits)};
    if (has_mask_property(f, candidate)) return candidate;
  }
  throw ReadoutError("no mask candidate verifies against the table");
}

SimonOutcome solve(const FunctionTable& f) {
  PipelineTrace trace = run_pipeline(f);
  switch (classify(trace.final)) {
    case OutcomeKind::OneToOne:
      return SimonOutcome::one_to_one();
    case OutcomeKind::Masked: {
      std::vector<Probe> probes;
      try {
        MaskSpec s = recover_mask(trace.final, f, &probes);
        return SimonOutcome::masked(s, std::move(probes));
      } catch (const ReadoutError&) {
        return SimonOutcome::promise_violated(std::move(probes));
      }
    }
    case OutcomeKind::PromiseViolated:
      break;
  }
  return SimonOutcome::promise_violated();
}

}  // namespace gasimon
