#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "xasim/types.hpp"

namespace xasim {

/// Per-grid-point estimate produced by one estimator run. `grid` is either
/// the dimensionless x lattice or an energy grid, depending on the producer.
struct SpectrumEstimate {
  RealVector grid;
  RealVector value;
  RealVector stderr_value;
  long long n_samples = 0;
  std::uint64_t seed = 0;

  // Diagnostics.
  RealVector imag_mean;             // discarded imaginary residual, if any
  bool insufficient_samples = false;
};

/// The shared spectrum table: one row per frequency with all three
/// representations of the lineshape plus the error bar on sigma.
struct SpectrumTable {
  RealVector omega;
  RealVector im_g;   // sum_rho Im G_rho(omega), dipole^2/energy
  RealVector c_eta;  // sum_rho ||m_rho|I>||^2 C_eta,rho(tau omega)
  RealVector sigma;  // cross section (raw or prefactored)
  RealVector stderr_sigma;
  std::vector<long long> n_samples;
};

/// CSV with fixed 17-significant-digit formatting; written atomically
/// (temp file + rename).
void write_spectrum_csv(const SpectrumTable& table,
                        const std::filesystem::path& path);
SpectrumTable read_spectrum_csv(const std::filesystem::path& path);

void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content);

struct CompareReport {
  double max_abs_dev = 0.0;   // on sigma
  double l2_dev = 0.0;        // on sigma
  RealVector z;               // per-point, combined-stderr z-scores on sigma
  double max_abs_z = 0.0;
  std::size_t n_points = 0;
  std::size_t n_over_threshold = 0;
  double threshold = 0.0;
};

/// Requires identical omega grids; z-scores use sqrt(se_a^2 + se_b^2).
CompareReport compare_spectra(const SpectrumTable& a, const SpectrumTable& b,
                              double z_threshold);

}  // namespace xasim
