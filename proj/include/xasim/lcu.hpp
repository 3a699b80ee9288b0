#pragma once

#include <optional>

#include "xasim/model.hpp"
#include "xasim/rng.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// One postselected LCU application of the dipole. The decomposition writes
/// m = sum_i (mu_i/2) R_i + (sum_i mu_i / 2) I over reflections
/// R_i = 2|v_i><v_i| - I in the dipole eigenbasis, giving the one-norm
/// alpha1 = (sum_i |mu_i| + |sum_i mu_i|) / 2.
struct LcuOutcome {
  bool success = false;
  double alpha1 = 0.0;
  double success_probability = 0.0;  // ||m|I>||^2 / alpha1^2
  std::optional<StateVector> state;  // m|I>/||m|I>|| when success
};

LcuOutcome lcu_apply_dipole(const StateVector& initial,
                            const DipoleOperator& m, CounterRng& rng);

/// Reflection-LCU one-norm of a Hermitian operator (reported quantity).
double lcu_one_norm(const Matrix& m);

struct NormEstimate {
  double norm = 0.0;
  double stderr_value = 0.0;
  bool one_sided = false;  // zero successes: stderr is a rule-of-three bound
};

/// ||m|I>|| from postselection statistics: alpha1 * sqrt(successes/trials),
/// with the binomial error propagated through the square root.
NormEstimate estimate_dipole_norm(long long successes, long long trials,
                                  double alpha1);

}  // namespace xasim
