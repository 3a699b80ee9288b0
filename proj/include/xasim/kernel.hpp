#pragma once

#include "xasim/eigensystem.hpp"
#include "xasim/model.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// Periodic Lorentzian kernel bundle: broadening eta, rescaling time tau,
/// spectral margin delta and the Fourier cutoff j_max. Fourier coefficients
/// are L_j = exp(-eta tau |j|).
struct KernelSpec {
  double eta = 0.0;    // energy units
  double tau = 0.0;    // inverse energy units
  double delta = 0.0;  // dimensionless margin inside (-pi, pi)
  int j_max = 0;
  double eps_hat = 0.0;  // dimensionless error target used to size j_max

  // Derived on construction.
  double l_total = 0.0;           // (1/2pi) sum_{|j|<=j_max} L_j
  double truncation_bound = 0.0;  // sup_x |(1/2pi) sum_{|j|>j_max} L_j e^{ijx}|

  double eta_tau() const { return eta * tau; }
  double fourier_coeff(long j) const;

  /// Closed form of the 2pi-periodized Lorentzian of width eta*tau:
  /// (1/2pi) sinh(eta tau) / (cosh(eta tau) - cos x). Integrates to 1.
  double periodic_lorentzian(double x) const;

  static KernelSpec make(double eta, double tau, double delta, int j_max,
                         double eps_hat);

  /// All rescaled eigenvalues must satisfy |tau E| < pi - delta.
  void validate_spectrum(const RealVector& eigenvalues) const;
};

/// Pick tau so the spectrum fits strictly inside (-(pi-delta), pi-delta),
/// with delta = eta*tau0 / max(1, ln(1/eps_hat)) resolved in one pass and
/// j_max = ceil(ln(2/eps_hat)/(eta tau)).
KernelSpec choose_tau(const RealVector& eigenvalues, double eta, double eps);
KernelSpec choose_tau(const HamiltonianModel& h, double eta, double eps);

}  // namespace xasim
