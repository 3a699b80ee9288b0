#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xasim/pauli.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

struct EigenDecomposition;

/// Qubit-space Hamiltonian, dense plus an optional Pauli-string expansion.
/// energy_shift records any H -> H - E_I translation already applied to
/// `dense`, so absolute energies can be recovered downstream.
struct HamiltonianModel {
  int n_qubits = 0;
  Matrix dense;
  PauliSum pauli_terms;  // empty means "not provided"
  double energy_shift = 0.0;
  int n_electrons = -1;  // fermionic provenance, -1 when not applicable
  std::string units = "hartree";

  // Filled lazily by diagonalize(); shared by copies of this model.
  mutable std::shared_ptr<const EigenDecomposition> eigendecomposition;

  void validate() const;
};

struct DipoleOperator {
  int n_qubits = 0;
  Matrix dense;
  char component_label = 'x';
  bool expectation_subtracted = false;

  void validate() const;
};

/// Hamiltonian-file loader (dense or Pauli form, optional dipole sections).
struct QubitProblem {
  HamiltonianModel hamiltonian;
  std::vector<DipoleOperator> dipoles;
};

QubitProblem load_hamiltonian_file(const std::string& path);

/// Translate H by -<I|H|I>, subtract <I|m|I> from the dipole, and normalize
/// m|I> into the estimator input state.
struct ShiftResult {
  HamiltonianModel hamiltonian;  // H - E_I, energy_shift = E_I
  DipoleOperator dipole;         // expectation-subtracted
  StateVector psi0;              // m|I> / ||m|I>||
  double norm_m = 0.0;           // ||m|I>||
  double e_initial = 0.0;        // <I|H|I>
};

ShiftResult shift_and_normalize(const HamiltonianModel& h,
                                const StateVector& initial,
                                const DipoleOperator& m);

}  // namespace xasim
