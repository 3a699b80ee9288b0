#pragma once

#include "xasim/eigensystem.hpp"
#include "xasim/kernel.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// Ascending QPE outcome lattice on [-pi, pi): the 2^n register labels m map
/// to x = 2 pi m / 2^n wrapped into the principal interval.
RealVector qpe_grid(int n_ancilla);

/// Register weights l_j over j = 0 .. 2^n - 1, normalized to sum l_j^2 = 1.
RealVector uniform_ancilla_weights(int n_ancilla);
/// One-sided Lorentzian weights l_j proportional to exp(-j eta tau).
RealVector lorentzian_ancilla_weights(int n_ancilla, double eta_tau);

/// Outcome distribution of kernel-weighted QPE, aligned with qpe_grid:
///   P(x) = (1/2^n) sum_k |<E_k|psi0>|^2 |sum_j l_j e^{i j (x - E_k tau)}|^2,
/// evaluated analytically in the eigenbasis.
RealVector qpe_distribution(const StateVector& psi0,
                            const EigenDecomposition& eig,
                            const KernelSpec& kernel, int n_ancilla,
                            const RealVector& weights);

/// Cross-check path: simulates the joint (ancilla + system) register through
/// weighted state preparation, controlled powers of exp(-i H tau) and the
/// ancilla Fourier transform, then traces out the system.
RealVector qpe_distribution_full_register(const StateVector& psi0,
                                          const EigenDecomposition& eig,
                                          const KernelSpec& kernel,
                                          int n_ancilla,
                                          const RealVector& weights);

}  // namespace xasim
