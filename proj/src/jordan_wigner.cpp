#include "xasim/jordan_wigner.hpp"

#include <cmath>
#include <map>
#include <string>

#include "xasim/pauli.hpp"

namespace xasim {

namespace {

using LadderOp = std::map<std::string, Complex>;

// c_p (lower = true) or c+_p on n qubits.
LadderOp jw_ladder(int p, int n, bool lower) {
  std::string base(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < p; ++q) base[static_cast<std::size_t>(n - 1 - q)] = 'Z';
  std::string x = base, y = base;
  x[static_cast<std::size_t>(n - 1 - p)] = 'X';
  y[static_cast<std::size_t>(n - 1 - p)] = 'Y';
  const Complex iy = lower ? Complex(0, 0.5) : Complex(0, -0.5);
  return {{x, Complex(0.5, 0)}, {y, iy}};
}

LadderOp ladder_product(const LadderOp& a, const LadderOp& b) {
  LadderOp out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      auto [s, phase] = pauli_mul(sa, sb);
      out[s] += ca * cb * phase;
    }
  }
  return out;
}

PauliSum one_body_pauli(const Matrix& coefficients, int n) {
  PauliAccumulator acc(n);
  std::vector<LadderOp> raise(static_cast<std::size_t>(n)),
      lower(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    raise[static_cast<std::size_t>(p)] = jw_ladder(p, n, false);
    lower[static_cast<std::size_t>(p)] = jw_ladder(p, n, true);
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Complex c = coefficients(p, q);
      if (std::abs(c) < 1e-15) continue;
      acc.add_product(raise[static_cast<std::size_t>(p)],
                      lower[static_cast<std::size_t>(q)], c);
    }
  }
  return acc.to_hermitian_sum();
}

}  // namespace

HamiltonianModel jordan_wigner(const FermionModel& model) {
  model.validate();
  const int n = model.n_spin_orbitals;
  if (n > kMaxSpinOrbitals) throw validation_error("size cap exceeded");

  std::vector<LadderOp> raise(static_cast<std::size_t>(n)),
      lower(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    raise[static_cast<std::size_t>(p)] = jw_ladder(p, n, false);
    lower[static_cast<std::size_t>(p)] = jw_ladder(p, n, true);
  }

  PauliAccumulator acc(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Complex c = model.one_body(p, q);
      if (std::abs(c) < 1e-15) continue;
      acc.add_product(raise[static_cast<std::size_t>(p)],
                      lower[static_cast<std::size_t>(q)], c);
    }
  }
  // 1/2 sum_pqrs g_pqrs c+_p c+_q c_s c_r
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;  // c+_p c+_p = 0
      LadderOp left = ladder_product(raise[static_cast<std::size_t>(p)],
                                     raise[static_cast<std::size_t>(q)]);
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          const double g = model.g(p, q, r, s);
          if (std::abs(g) < 1e-15) continue;
          LadderOp right = ladder_product(lower[static_cast<std::size_t>(s)],
                                          lower[static_cast<std::size_t>(r)]);
          acc.add_product(left, right, 0.5 * g);
        }
      }
    }
  }

  HamiltonianModel h;
  h.n_qubits = n;
  h.pauli_terms = acc.to_hermitian_sum();
  h.dense = pauli_sum_dense(h.pauli_terms, n);
  h.n_electrons = model.n_electrons;
  h.units = model.units;
  h.validate();
  return h;
}

DipoleOperator jordan_wigner_one_body(const Matrix& coefficients,
                                      char component_label) {
  const int n = static_cast<int>(coefficients.rows());
  if (n > kMaxSpinOrbitals) throw validation_error("size cap exceeded");
  require_hermitian(coefficients, "dipole coefficients");
  DipoleOperator m;
  m.n_qubits = n;
  m.component_label = component_label;
  m.dense = pauli_sum_dense(one_body_pauli(coefficients, n), n);
  m.validate();
  return m;
}

}  // namespace xasim
