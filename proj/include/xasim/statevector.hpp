#pragma once

#include "xasim/types.hpp"

namespace xasim {

/// Normalized pure state on n qubits; basis index bit k is qubit k.
struct StateVector {
  int n_qubits = 0;
  Vector amplitudes;

  StateVector() = default;
  StateVector(int n, Vector amps);

  static StateVector basis_state(int n, Eigen::Index index);
  /// Normalizes the input vector (errors on a zero vector).
  static StateVector normalized(int n, Vector amps);

  void validate() const;
};

/// <a|b>
Complex overlap(const StateVector& a, const StateVector& b);

}  // namespace xasim
