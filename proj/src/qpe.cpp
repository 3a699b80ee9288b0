#include "xasim/qpe.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace xasim {

namespace {
constexpr double kPi = std::numbers::pi;

void check_weights(const RealVector& weights, int n_ancilla) {
  if (weights.size() != (Eigen::Index(1) << n_ancilla)) {
    throw validation_error("ancilla weight vector must have 2^n entries");
  }
  if (std::abs(weights.squaredNorm() - 1.0) > 1e-8) {
    throw validation_error("weight normalization failure");
  }
}

}  // namespace

RealVector qpe_grid(int n_ancilla) {
  if (n_ancilla < 1 || n_ancilla > 24) {
    throw validation_error("ancilla count out of range");
  }
  const Eigen::Index m_count = Eigen::Index(1) << n_ancilla;
  RealVector grid(m_count);
  for (Eigen::Index i = 0; i < m_count; ++i) {
    const Eigen::Index m = (i + m_count / 2) % m_count;
    const Eigen::Index centered = m >= m_count / 2 ? m - m_count : m;
    grid(i) = 2.0 * kPi * static_cast<double>(centered) /
              static_cast<double>(m_count);
  }
  return grid;
}

RealVector uniform_ancilla_weights(int n_ancilla) {
  const Eigen::Index m_count = Eigen::Index(1) << n_ancilla;
  return RealVector::Constant(m_count,
                              1.0 / std::sqrt(static_cast<double>(m_count)));
}

RealVector lorentzian_ancilla_weights(int n_ancilla, double eta_tau) {
  if (eta_tau <= 0) throw validation_error("eta*tau must be positive");
  const Eigen::Index m_count = Eigen::Index(1) << n_ancilla;
  RealVector w(m_count);
  for (Eigen::Index j = 0; j < m_count; ++j) {
    w(j) = std::exp(-eta_tau * static_cast<double>(j));
  }
  return w / w.norm();
}

RealVector qpe_distribution(const StateVector& psi0,
                            const EigenDecomposition& eig,
                            const KernelSpec& kernel, int n_ancilla,
                            const RealVector& weights) {
  check_weights(weights, n_ancilla);
  psi0.validate();
  const Eigen::Index m_count = Eigen::Index(1) << n_ancilla;
  const Vector beta = eig.eigenvectors.adjoint() * psi0.amplitudes;

  Eigen::FFT<double> fft;
  RealVector p_raw = RealVector::Zero(m_count);  // indexed by register label m
  std::vector<Complex> coeff(static_cast<std::size_t>(m_count));
  std::vector<Complex> amp(static_cast<std::size_t>(m_count));
  for (Eigen::Index k = 0; k < beta.size(); ++k) {
    const double pk = std::norm(beta(k));
    if (pk < kWeightFloor) continue;
    const double phase_step = eig.eigenvalues(k) * kernel.tau;
    for (Eigen::Index j = 0; j < m_count; ++j) {
      coeff[static_cast<std::size_t>(j)] =
          weights(j) * std::exp(Complex(0.0, -phase_step * double(j)));
    }
    // A(m) = sum_j coeff_j e^{+2 pi i j m / M}: unnormalized inverse DFT.
    fft.inv(amp, coeff);
    for (Eigen::Index m = 0; m < m_count; ++m) {
      p_raw(m) += pk * std::norm(amp[static_cast<std::size_t>(m)] *
                                 static_cast<double>(m_count));
    }
  }
  p_raw /= static_cast<double>(m_count);

  RealVector p(m_count);
  for (Eigen::Index i = 0; i < m_count; ++i) {
    p(i) = p_raw((i + m_count / 2) % m_count);
  }
  if (std::abs(p.sum() - 1.0) > 1e-10) {
    throw numerical_error("QPE outcome distribution does not sum to 1");
  }
  return p;
}

RealVector qpe_distribution_full_register(const StateVector& psi0,
                                          const EigenDecomposition& eig,
                                          const KernelSpec& kernel,
                                          int n_ancilla,
                                          const RealVector& weights) {
  check_weights(weights, n_ancilla);
  if (n_ancilla > 10 || psi0.n_qubits > 6) {
    throw validation_error("full-register path is for small cross-checks only");
  }
  const Eigen::Index m_count = Eigen::Index(1) << n_ancilla;
  const Eigen::Index dim = psi0.amplitudes.size();

  // |Psi> = sum_j l_j |j> U^j |psi0>, stored as slices over the ancilla label.
  Matrix joint(dim, m_count);
  for (Eigen::Index j = 0; j < m_count; ++j) {
    const StateVector evolved =
        time_evolve(psi0, eig, kernel.tau * static_cast<double>(j));
    joint.col(j) = weights(j) * evolved.amplitudes;
  }

  // Ancilla QFT |j> -> (1/sqrt M) sum_m e^{2 pi i j m / M} |m>.
  Matrix qft(m_count, m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (Eigen::Index j = 0; j < m_count; ++j) {
      qft(m, j) = std::exp(Complex(0.0, 2.0 * kPi * double(m) * double(j) /
                                        double(m_count))) /
                  std::sqrt(static_cast<double>(m_count));
    }
  }
  Matrix transformed = joint * qft.transpose();

  RealVector p(m_count);
  for (Eigen::Index i = 0; i < m_count; ++i) {
    const Eigen::Index m = (i + m_count / 2) % m_count;
    p(i) = transformed.col(m).squaredNorm();
  }
  return p;
}

}  // namespace xasim
