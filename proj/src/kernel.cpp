#include "xasim/kernel.hpp"

#include <cmath>
#include <numbers>

namespace xasim {

namespace {
constexpr double kPi = std::numbers::pi;
// Keeps the extremal |tau E_k| strictly below pi - delta while staying within
// example tolerances of the boundary value (pi - delta)/max|E|.
constexpr double kStrictMargin = 1e-9;
}  // namespace

double KernelSpec::fourier_coeff(long j) const {
  return std::exp(-eta_tau() * static_cast<double>(std::labs(j)));
}

double KernelSpec::periodic_lorentzian(double x) const {
  const double a = eta_tau();
  return 0.5 / kPi * std::sinh(a) / (std::cosh(a) - std::cos(x));
}

KernelSpec KernelSpec::make(double eta, double tau, double delta, int j_max,
                            double eps_hat) {
  if (eta <= 0 || tau <= 0) throw validation_error("eta and tau must be positive");
  if (delta <= 0 || delta >= kPi) {
    throw validation_error("delta must lie in (0, pi)");
  }
  if (j_max < 1) throw validation_error("j_max must be positive");
  KernelSpec k;
  k.eta = eta;
  k.tau = tau;
  k.delta = delta;
  k.j_max = j_max;
  k.eps_hat = eps_hat;
  const double r = std::exp(-k.eta_tau());
  // (1/2pi)(1 + 2 sum_{j=1}^{j_max} r^j), geometric closed form.
  k.l_total =
      0.5 / kPi * (1.0 + 2.0 * r * (1.0 - std::pow(r, k.j_max)) / (1.0 - r));
  k.truncation_bound = std::pow(r, k.j_max + 1) / (1.0 - r) / kPi;
  if (!(k.l_total > 0.0)) throw numerical_error("kernel weight sum not positive");
  return k;
}

void KernelSpec::validate_spectrum(const RealVector& eigenvalues) const {
  const double bound = kPi - delta;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (!(std::abs(tau * eigenvalues(i)) < bound)) {
      throw validation_error("rescaled eigenvalue outside (-(pi-delta), pi-delta)");
    }
  }
}

KernelSpec choose_tau(const RealVector& eigenvalues, double eta, double eps) {
  if (eta <= 0 || eps <= 0) throw validation_error("eta and eps must be positive");
  if (eigenvalues.size() == 0) throw validation_error("empty spectrum");
  const double e_max = eigenvalues.cwiseAbs().maxCoeff();
  if (e_max < 1e-300) {
    throw validation_error("zero Hamiltonian: tau is unbounded");
  }
  const double tau0 = kPi / e_max;
  const double eps_hat = eps / tau0;
  if (!(eps_hat > 0) || !std::isfinite(eps_hat)) {
    throw validation_error("invalid dimensionless error target");
  }
  const double delta = eta * tau0 / std::max(1.0, std::log(1.0 / eps_hat));
  if (delta >= kPi / 2) {
    throw validation_error("broadening too large for the spectral window");
  }
  const double tau = (kPi - delta) / e_max * (1.0 - kStrictMargin);
  const int j_max = std::max(
      1, static_cast<int>(std::ceil(std::log(2.0 / eps_hat) / (eta * tau))));
  KernelSpec k = KernelSpec::make(eta, tau, delta, j_max, eps_hat);
  k.validate_spectrum(eigenvalues);
  return k;
}

KernelSpec choose_tau(const HamiltonianModel& h, double eta, double eps) {
  return choose_tau(diagonalize(h).eigenvalues, eta, eps);
}

}  // namespace xasim
