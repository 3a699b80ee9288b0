#include "xasim/model.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "xasim/eigensystem.hpp"

namespace xasim {

namespace {

using nlohmann::json;

Matrix parse_dense(const json& rows, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw validation_error("dense matrix must have 2^n rows");
  }
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw validation_error("dense matrix row has wrong length");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (v.is_number()) {
        m(i, j) = v.get<double>();
      } else if (v.is_array() && v.size() == 2) {
        m(i, j) = Complex(v[0].get<double>(), v[1].get<double>());
      } else {
        throw validation_error("dense entries must be numbers or [re, im]");
      }
    }
  }
  return m;
}

PauliSum parse_pauli(const json& terms, int n_qubits) {
  PauliSum sum;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) {
      throw validation_error("pauli entries must be [coefficient, string]");
    }
    PauliTerm term{t[0].get<double>(), t[1].get<std::string>()};
    if (static_cast<int>(term.ops.size()) != n_qubits) {
      throw validation_error("pauli string length does not match n_qubits");
    }
    sum.push_back(std::move(term));
  }
  return sum;
}

// Operator section: either {"dense": ...} or {"pauli": ...}.
Matrix parse_operator(const json& section, int n_qubits, PauliSum* pauli_out) {
  if (section.contains("dense")) {
    return parse_dense(section.at("dense"), n_qubits);
  }
  if (section.contains("pauli")) {
    PauliSum terms = parse_pauli(section.at("pauli"), n_qubits);
    Matrix dense = pauli_sum_dense(terms, n_qubits);
    if (pauli_out) *pauli_out = std::move(terms);
    return dense;
  }
  throw validation_error("operator section needs 'dense' or 'pauli'");
}

}  // namespace

void HamiltonianModel::validate() const {
  if (n_qubits <= 0 || n_qubits > kMaxQubits) {
    throw validation_error("qubit count exceeds desk-scale cap");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (dense.rows() != dim || dense.cols() != dim) {
    throw validation_error("dense Hamiltonian has wrong dimensions");
  }
  require_hermitian(dense, "Hamiltonian");
  if (!pauli_terms.empty()) {
    const Matrix expanded = pauli_sum_dense(pauli_terms, n_qubits);
    const double scale = std::max(1.0, dense.norm());
    if ((expanded - dense).norm() > 1e-10 * scale) {
      throw validation_error("pauli expansion does not match dense matrix");
    }
  }
}

void DipoleOperator::validate() const {
  if (n_qubits <= 0 || n_qubits > kMaxQubits) {
    throw validation_error("qubit count exceeds desk-scale cap");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (dense.rows() != dim || dense.cols() != dim) {
    throw validation_error("dipole operator has wrong dimensions");
  }
  require_hermitian(dense, "dipole operator");
  if (component_label != 'x' && component_label != 'y' &&
      component_label != 'z') {
    throw validation_error("dipole component must be one of x, y, z");
  }
}

QubitProblem load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open model file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("model file parse error: ") + e.what());
  }

  QubitProblem problem;
  HamiltonianModel& h = problem.hamiltonian;
  if (!doc.contains("n_qubits")) throw validation_error("missing n_qubits");
  h.n_qubits = doc.at("n_qubits").get<int>();
  if (h.n_qubits <= 0 || h.n_qubits > kMaxQubits) {
    throw validation_error("qubit count exceeds desk-scale cap");
  }
  h.units = doc.value("units", std::string("hartree"));
  if (h.units != "hartree" && h.units != "ev") {
    throw validation_error("units must be 'hartree' or 'ev'");
  }
  h.dense = parse_operator(doc, h.n_qubits, &h.pauli_terms);
  h.validate();

  if (doc.contains("dipole")) {
    for (const auto& [label, section] : doc.at("dipole").items()) {
      if (label.size() != 1) {
        throw validation_error("dipole component must be one of x, y, z");
      }
      DipoleOperator m;
      m.n_qubits = h.n_qubits;
      m.component_label = label[0];
      m.dense = parse_operator(section, h.n_qubits, nullptr);
      m.validate();
      problem.dipoles.push_back(std::move(m));
    }
  }
  return problem;
}

ShiftResult shift_and_normalize(const HamiltonianModel& h,
                                const StateVector& initial,
                                const DipoleOperator& m) {
  h.validate();
  m.validate();
  initial.validate();

  const Complex e_initial_c =
      initial.amplitudes.dot(h.dense * initial.amplitudes);
  const double e_initial = e_initial_c.real();

  ShiftResult out;
  out.e_initial = e_initial;
  out.hamiltonian = h;
  out.hamiltonian.eigendecomposition.reset();
  const Eigen::Index dim = h.dense.rows();
  out.hamiltonian.dense =
      h.dense - e_initial * Matrix::Identity(dim, dim);
  out.hamiltonian.energy_shift = h.energy_shift + e_initial;
  if (!out.hamiltonian.pauli_terms.empty()) {
    out.hamiltonian.pauli_terms.push_back(
        {-e_initial, std::string(static_cast<std::size_t>(h.n_qubits), 'I')});
  }

  const Complex m_expect = initial.amplitudes.dot(m.dense * initial.amplitudes);
  out.dipole = m;
  out.dipole.dense = m.dense - m_expect.real() * Matrix::Identity(dim, dim);
  out.dipole.expectation_subtracted = true;

  Vector excited = out.dipole.dense * initial.amplitudes;
  out.norm_m = excited.norm();
  if (out.norm_m < kDarkStateTol) {
    throw validation_error("dark initial state");
  }
  out.psi0 = StateVector(h.n_qubits, excited / out.norm_m);
  return out;
}

}  // namespace xasim
