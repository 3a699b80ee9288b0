#include "xasim/pauli.hpp"

#include <cmath>
#include <cstdlib>

#include "xasim/types.hpp"

namespace xasim {

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() <= tol * scale;
}

void require_hermitian(const Matrix& m, const std::string& what, double tol) {
  if (!is_hermitian(m, tol)) {
    throw validation_error(what + " not Hermitian");
  }
}

namespace {

// Single-qubit products: sigma_a * sigma_b = phase * sigma_c.
// Indexed by [a][b] over I=0, X=1, Y=2, Z=3.
struct SingleProduct {
  char out;
  Complex phase;
};

int pauli_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw validation_error(std::string("invalid Pauli character '") + c + "'");
  }
}

const SingleProduct kTable[4][4] = {
    {{'I', 1.0}, {'X', 1.0}, {'Y', 1.0}, {'Z', 1.0}},
    {{'X', 1.0}, {'I', 1.0}, {'Z', Complex(0, 1)}, {'Y', Complex(0, -1)}},
    {{'Y', 1.0}, {'Z', Complex(0, -1)}, {'I', 1.0}, {'X', Complex(0, 1)}},
    {{'Z', 1.0}, {'Y', Complex(0, 1)}, {'X', Complex(0, -1)}, {'I', 1.0}},
};

}  // namespace

std::pair<std::string, Complex> pauli_mul(const std::string& a,
                                          const std::string& b) {
  if (a.size() != b.size()) {
    throw validation_error("Pauli string length mismatch");
  }
  std::string out(a.size(), 'I');
  Complex phase = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const SingleProduct& p = kTable[pauli_index(a[i])][pauli_index(b[i])];
    out[i] = p.out;
    phase *= p.phase;
  }
  return {out, phase};
}

Matrix pauli_string_dense(const std::string& ops) {
  const int n = static_cast<int>(ops.size());
  if (n > kMaxQubits) throw validation_error("qubit count exceeds desk-scale cap");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix m = Matrix::Zero(dim, dim);
  // A Pauli string is a signed permutation: column s maps to a single row.
  for (Eigen::Index s = 0; s < dim; ++s) {
    Eigen::Index target = s;
    Complex phase = 1.0;
    for (int q = 0; q < n; ++q) {
      const char op = ops[static_cast<std::size_t>(n - 1 - q)];
      const int bit = static_cast<int>((s >> q) & 1);
      switch (op) {
        case 'I':
          break;
        case 'X':
          target ^= (Eigen::Index(1) << q);
          break;
        case 'Y':
          target ^= (Eigen::Index(1) << q);
          phase *= bit ? Complex(0, -1) : Complex(0, 1);
          break;
        case 'Z':
          if (bit) phase = -phase;
          break;
        default:
          throw validation_error(std::string("invalid Pauli character '") + op + "'");
      }
    }
    m(target, s) += phase;
  }
  return m;
}

Matrix pauli_sum_dense(const PauliSum& terms, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : terms) {
    if (static_cast<int>(t.ops.size()) != n_qubits) {
      throw validation_error("Pauli string length does not match qubit count");
    }
    m += t.coefficient * pauli_string_dense(t.ops);
  }
  return m;
}

void PauliAccumulator::add(const std::string& ops, Complex coefficient) {
  if (static_cast<int>(ops.size()) != n_qubits_) {
    throw validation_error("Pauli string length does not match qubit count");
  }
  terms_[ops] += coefficient;
}

void PauliAccumulator::add_product(const std::map<std::string, Complex>& a,
                                   const std::map<std::string, Complex>& b,
                                   Complex scale) {
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      auto [s, phase] = pauli_mul(sa, sb);
      add(s, scale * ca * cb * phase);
    }
  }
}

PauliSum PauliAccumulator::to_hermitian_sum(double tol) const {
  PauliSum out;
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) < tol) continue;
    if (std::abs(c.imag()) > 1e-9 * std::max(1.0, std::abs(c.real()))) {
      throw numerical_error("non-Hermitian residue in Pauli expansion");
    }
    out.push_back({c.real(), s});
  }
  return out;
}

}  // namespace xasim
