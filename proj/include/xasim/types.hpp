#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace xasim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Desk-scale caps: dense operators stay exactly diagonalizable in seconds.
inline constexpr int kMaxQubits = 12;
inline constexpr int kMaxSpinOrbitals = 8;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDarkStateTol = 1e-12;
inline constexpr double kWeightFloor = 1e-14;

// CODATA 2018
inline constexpr double kHartreeToEv = 27.211386245988;
inline constexpr double kSpeedOfLightAu = 137.035999084;

/// Bad inputs, malformed files, violated preconditions (CLI exit code 2).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures of the numerics themselves (CLI exit code 3).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative Frobenius-norm Hermiticity check.
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

void require_hermitian(const Matrix& m, const std::string& what,
                       double tol = kHermitianTol);

}  // namespace xasim
