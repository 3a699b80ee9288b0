#pragma once

#include "xasim/fermion.hpp"
#include "xasim/model.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// Jordan-Wigner image of the full second-quantized Hamiltonian. Qubit p
/// carries the occupation of spin-orbital p; the Z string acts on lower
/// indices, i.e. c_p -> Z_0 ... Z_{p-1} (X_p + iY_p)/2.
HamiltonianModel jordan_wigner(const FermionModel& model);

/// Same mapping for a one-body coefficient matrix sum_ab m_ab c+_a c_b.
DipoleOperator jordan_wigner_one_body(const Matrix& coefficients,
                                      char component_label);

}  // namespace xasim
