#pragma once

#include <vector>

#include "xasim/eigensystem.hpp"
#include "xasim/kernel.hpp"
#include "xasim/model.hpp"
#include "xasim/spectrum.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// One absorption line: excitation energy E_F - E_I and dipole weight
/// |<F|m|I>|^2. Weights sum to ||m|I>||^2.
struct SpectralLine {
  double delta_e = 0.0;
  double weight = 0.0;
};

std::vector<SpectralLine> exact_lines(const HamiltonianModel& h,
                                      const DipoleOperator& m,
                                      const StateVector& initial);

/// Normalized resolvent G(omega) = sum_k p_k / (delta_e_k - omega + i eta)
/// with p_k = weight_k / sum(weights). Im G <= 0 everywhere.
Complex exact_green(const std::vector<SpectralLine>& lines, double omega,
                    double eta);
Complex exact_green(const HamiltonianModel& h, const DipoleOperator& m,
                    const StateVector& initial, double omega, double eta);

/// Kernel-smoothed spectral measure C_eta(x) = sum_k p_k L_eta(x - tau dE_k)
/// with the closed-form periodic Lorentzian; integrates to 1 over a period.
double exact_c_eta(const KernelSpec& kernel,
                   const std::vector<SpectralLine>& lines, double x);

/// Conversion between the two lineshape representations: away from the
/// periodic images, Im G(x/tau) = -pi tau C_eta(x).
double im_g_from_c_eta(double c_eta, double tau);
double c_eta_from_im_g(double im_g, double tau);

/// Sup-norm bound on the periodic-image contamination of the single-image
/// Lorentzian at distance >= `image_distance` from the nearest copy.
double lorentzian_image_error_bound(const KernelSpec& kernel,
                                    double image_distance);

/// Kramers-Heisenberg cross section via the Green's-function route,
/// expectation-subtracted dipoles, all requested components summed.
/// prefactor_on multiplies by 4 pi omega / (3 c); otherwise sigma is the raw
/// -sum_rho Im script-G_rho(omega).
SpectrumTable exact_cross_section(const HamiltonianModel& h,
                                  const std::vector<DipoleOperator>& dipoles,
                                  const StateVector& initial,
                                  const RealVector& omega_grid, double eta,
                                  bool prefactor_on);

}  // namespace xasim
