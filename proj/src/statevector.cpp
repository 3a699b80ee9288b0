#include "xasim/statevector.hpp"

#include <cmath>

namespace xasim {

StateVector::StateVector(int n, Vector amps)
    : n_qubits(n), amplitudes(std::move(amps)) {
  validate();
}

StateVector StateVector::basis_state(int n, Eigen::Index index) {
  Vector v = Vector::Zero(Eigen::Index(1) << n);
  v(index) = 1.0;
  return StateVector(n, std::move(v));
}

StateVector StateVector::normalized(int n, Vector amps) {
  const double norm = amps.norm();
  if (norm < kDarkStateTol) {
    throw validation_error("cannot normalize a zero state vector");
  }
  return StateVector(n, amps / norm);
}

void StateVector::validate() const {
  if (n_qubits <= 0 || n_qubits > kMaxQubits) {
    throw validation_error("qubit count exceeds desk-scale cap");
  }
  if (amplitudes.size() != (Eigen::Index(1) << n_qubits)) {
    throw validation_error("state vector length is not 2^n");
  }
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
    throw validation_error("state vector is not normalized");
  }
}

Complex overlap(const StateVector& a, const StateVector& b) {
  return a.amplitudes.dot(b.amplitudes);
}

}  // namespace xasim
