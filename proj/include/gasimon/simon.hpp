#pragma once

#include <vector>

#include "gasimon/function_table.hpp"
#include "gasimon/multivector.hpp"

namespace gasimon {

/// The four states of one pipeline run, all of width n+m.
struct PipelineTrace {
  Multivector initial;
  Multivector after_En;
  Multivector after_Uf;
  Multivector final;
};

/// Uniform spreading operator: the sum of the 2^n blades whose first n
/// positions range over {0,1}^n and whose last m positions are zero.
Multivector build_En(int n, int m);

/// Reverse of the spreading operator: the same blades, each weighted by
/// its reverse sign.
Multivector build_Fn(int n, int m);

/// Oracle gate: relabels every blade e_{A||0^m} to e_{A||f(A)}, keeping
/// coefficients. Defined only on states whose last m positions are zero;
/// throws OracleDomainError otherwise.
Multivector apply_Uf(const FunctionTable& f, const Multivector& state);

/// Runs e_0 -> E_n -> U_f -> F_n, applying E_n and F_n through the full
/// geometric product.
PipelineTrace run_pipeline(const FunctionTable& f);

/// Closed form of the final-state coefficient at blade e_{X||f(A)} when f
/// hides mask s: with B = X xor A, the value is
/// (-1)^(sum_{i<j} (B_i+A_i) B_j) * (1 + (-1)^(sum_{i<j} (B_i+A_i) S_j)),
/// one of {-2, 0, +2}.
Coefficient analytic_amplitude(const BitString& x, const BitString& a,
                               const MaskSpec& s);

/// OneToOne if every coefficient has magnitude 1, Masked if magnitude 2,
/// PromiseViolated otherwise (including the empty state).
OutcomeKind classify(const Multivector& final);

/// Reads the mask from the final state: for k in [0, n-2] the blade with
/// ones at first-register positions k+1, k+2 and tail f(0^n) has a zero
/// coefficient exactly when S_{k+2} = 1. S_1 is resolved by testing both
/// candidates against the table. Throws ReadoutError when neither
/// verifies (a promise violation that escaped classification). When
/// `probes` is non-null the probed blades and coefficients are appended.
MaskSpec recover_mask(const Multivector& final, const FunctionTable& f,
                      std::vector<Probe>* probes = nullptr);

/// Full solver: pipeline, classification, readout, verification.
/// Violations are reported as PromiseViolated, never thrown.
SimonOutcome solve(const FunctionTable& f);

}  // namespace gasimon
