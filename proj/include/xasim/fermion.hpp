#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "xasim/types.hpp"

namespace xasim {

/// Second-quantized problem input:
///   H = sum_pq h[p][q] c+_p c_q
///     + 1/2 sum_pqrs g[p][q][r][s] c+_p c+_q c_s c_r,
/// with g in the physicist convention <pq|rs> and real orbitals (8-fold
/// permutation symmetry). Dipole components are one-body coefficient
/// matrices m[a][b] for sum_ab m_ab c+_a c_b.
struct FermionModel {
  int n_spin_orbitals = 0;
  int n_electrons = -1;
  std::set<int> core_indices;
  Matrix one_body;
  std::vector<double> two_body;  // flattened [p][q][r][s]
  std::map<char, Matrix> dipole;
  std::string units = "hartree";

  double g(int p, int q, int r, int s) const;
  double& g(int p, int q, int r, int s);

  void validate() const;
};

FermionModel load_fermion_model(const std::string& path);

/// Core-valence separation: zero every two-body integral touching a core
/// index. One-body terms (core included) are retained unchanged.
FermionModel apply_cvs(const FermionModel& model);

/// Keep only coefficients m_ab with exactly one index in the core set, so the
/// operator excites out of (or back into) the core. Hermiticity-preserving.
Matrix filter_dipole_to_core(const Matrix& coefficients,
                             const std::set<int>& core);

}  // namespace xasim
