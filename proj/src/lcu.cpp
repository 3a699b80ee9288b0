#include "xasim/lcu.hpp"

#include <cmath>

#include "xasim/eigensystem.hpp"

namespace xasim {

double lcu_one_norm(const Matrix& m) {
  require_hermitian(m, "LCU operand");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("dipole eigendecomposition failed");
  }
  const RealVector mu = solver.eigenvalues();
  return 0.5 * (mu.cwiseAbs().sum() + std::abs(mu.sum()));
}

LcuOutcome lcu_apply_dipole(const StateVector& initial,
                            const DipoleOperator& m, CounterRng& rng) {
  m.validate();
  initial.validate();

  LcuOutcome out;
  out.alpha1 = lcu_one_norm(m.dense);

  const Vector target = m.dense * initial.amplitudes;
  const double norm = target.norm();
  out.success_probability =
      out.alpha1 < kDarkStateTol ? 0.0 : (norm * norm) / (out.alpha1 * out.alpha1);
  if (out.success_probability > 1.0 + 1e-9) {
    throw numerical_error("LCU success probability exceeds 1");
  }

  // Postselect-first: a failed shot aborts before any evolution.
  out.success = norm >= kDarkStateTol && rng.bernoulli(out.success_probability);
  if (out.success) {
    out.state = StateVector(initial.n_qubits, target / norm);
  }
  return out;
}

NormEstimate estimate_dipole_norm(long long successes, long long trials,
                                  double alpha1) {
  if (trials <= 0) throw validation_error("trials must be positive");
  if (successes < 0 || successes > trials) {
    throw validation_error("success count out of range");
  }
  NormEstimate out;
  const double p_hat =
      static_cast<double>(successes) / static_cast<double>(trials);
  out.norm = alpha1 * std::sqrt(p_hat);
  if (successes == 0) {
    // Rule-of-three upper bound in place of the undefined propagated error.
    out.one_sided = true;
    out.stderr_value = alpha1 * std::sqrt(3.0 / static_cast<double>(trials));
    return out;
  }
  const double p_err =
      std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
  out.stderr_value = alpha1 * p_err / (2.0 * std::sqrt(p_hat));
  return out;
}

}  // namespace xasim
