#pragma once

#include "xasim/model.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// Exact spectral decomposition H = V diag(E) V^dag, eigenvalues ascending.
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;  // columns are |E_k>
};

EigenDecomposition diagonalize_dense(const Matrix& h);

/// Cached per Hamiltonian: repeated calls reuse the stored decomposition.
const EigenDecomposition& diagonalize(const HamiltonianModel& h);

/// V exp(-i E t) V^dag psi; exact and norm-preserving.
StateVector time_evolve(const StateVector& psi, const EigenDecomposition& eig,
                        double t);

/// Lowest eigenstate; for particle-conserving fermionic Hamiltonians with
/// n_electrons set, the lowest state of that particle-number sector.
StateVector ground_state(const HamiltonianModel& h);

}  // namespace xasim
