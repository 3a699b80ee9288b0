#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xasim/types.hpp"

namespace xasim {

/// One weighted Pauli string. ops is over {I,X,Y,Z} with ops[0] acting on the
/// highest qubit (basis index bit n-1) and ops.back() on qubit 0, matching the
/// |n_{k-1} ... n_1 n_0> basis-label convention.
struct PauliTerm {
  double coefficient = 0.0;
  std::string ops;
};

using PauliSum = std::vector<PauliTerm>;

/// Product of two equal-length Pauli strings -> (string, phase).
std::pair<std::string, Complex> pauli_mul(const std::string& a,
                                          const std::string& b);

Matrix pauli_string_dense(const std::string& ops);
Matrix pauli_sum_dense(const PauliSum& terms, int n_qubits);

/// Accumulates complex-weighted Pauli strings during operator algebra
/// (products of Jordan-Wigner ladder operators), then collapses to a real
/// PauliSum for a Hermitian result.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(int n_qubits) : n_qubits_(n_qubits) {}

  void add(const std::string& ops, Complex coefficient);
  void add_product(const std::map<std::string, Complex>& a,
                   const std::map<std::string, Complex>& b, Complex scale);

  const std::map<std::string, Complex>& terms() const { return terms_; }

  /// Drops terms below `tol` and verifies residual imaginary parts are noise.
  PauliSum to_hermitian_sum(double tol = 1e-12) const;

 private:
  int n_qubits_;
  std::map<std::string, Complex> terms_;
};

}  // namespace xasim
