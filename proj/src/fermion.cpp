#include "xasim/fermion.hpp"

#include <array>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace xasim {

namespace {

using nlohmann::json;

Complex parse_entry(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw validation_error("matrix entries must be numbers or [re, im] pairs");
}

Matrix parse_matrix(const json& rows, int n, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw validation_error(what + " must be an " + std::to_string(n) + "x" +
                           std::to_string(n) + " array");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
      throw validation_error(what + " row has wrong length");
    }
    for (int j = 0; j < n; ++j) m(i, j) = parse_entry(rows[i][j]);
  }
  return m;
}

// The 8 index images of <pq|rs> for real orbitals.
std::array<std::array<int, 4>, 8> symmetry_images(int p, int q, int r, int s) {
  return {{{p, q, r, s},
           {r, q, p, s},
           {p, s, r, q},
           {r, s, p, q},
           {q, p, s, r},
           {q, r, s, p},
           {s, p, q, r},
           {s, r, q, p}}};
}

}  // namespace

double FermionModel::g(int p, int q, int r, int s) const {
  const int n = n_spin_orbitals;
  return two_body[static_cast<std::size_t>(((p * n + q) * n + r) * n + s)];
}

double& FermionModel::g(int p, int q, int r, int s) {
  const int n = n_spin_orbitals;
  return two_body[static_cast<std::size_t>(((p * n + q) * n + r) * n + s)];
}

void FermionModel::validate() const {
  if (n_spin_orbitals <= 0 || n_spin_orbitals > kMaxSpinOrbitals) {
    throw validation_error("n_spin_orbitals must be in [1, " +
                           std::to_string(kMaxSpinOrbitals) + "]");
  }
  require_hermitian(one_body, "one-body");
  for (int idx : core_indices) {
    if (idx < 0 || idx >= n_spin_orbitals) {
      throw validation_error("core index out of range");
    }
  }
  const std::size_t n4 = static_cast<std::size_t>(n_spin_orbitals) *
                         n_spin_orbitals * n_spin_orbitals * n_spin_orbitals;
  if (two_body.size() != n4) {
    throw validation_error("two-body tensor has wrong size");
  }
  for (int p = 0; p < n_spin_orbitals; ++p)
    for (int q = 0; q < n_spin_orbitals; ++q)
      for (int r = 0; r < n_spin_orbitals; ++r)
        for (int s = 0; s < n_spin_orbitals; ++s) {
          const double v = g(p, q, r, s);
          for (const auto& im : symmetry_images(p, q, r, s)) {
            if (std::abs(g(im[0], im[1], im[2], im[3]) - v) >
                1e-10 * std::max(1.0, std::abs(v))) {
              throw validation_error("two-body symmetry violation");
            }
          }
        }
  for (const auto& [label, m] : dipole) {
    if (label != 'x' && label != 'y' && label != 'z') {
      throw validation_error("dipole component must be one of x, y, z");
    }
    if (m.rows() != n_spin_orbitals || m.cols() != n_spin_orbitals) {
      throw validation_error("dipole coefficient matrix has wrong size");
    }
    require_hermitian(m, "dipole coefficients");
  }
}

FermionModel load_fermion_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open model file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("model file parse error: ") + e.what());
  }

  FermionModel model;
  if (!doc.contains("n_spin_orbitals")) {
    throw validation_error("missing n_spin_orbitals");
  }
  model.n_spin_orbitals = doc.at("n_spin_orbitals").get<int>();
  if (model.n_spin_orbitals <= 0 ||
      model.n_spin_orbitals > kMaxSpinOrbitals) {
    throw validation_error("n_spin_orbitals must be in [1, " +
                           std::to_string(kMaxSpinOrbitals) + "]");
  }
  const int n = model.n_spin_orbitals;

  model.n_electrons = doc.value("n_electrons", -1);
  model.units = doc.value("units", std::string("hartree"));
  if (model.units != "hartree" && model.units != "ev") {
    throw validation_error("units must be 'hartree' or 'ev'");
  }
  const std::string convention =
      doc.value("convention", std::string("physicist-pqrs"));
  if (convention != "physicist-pqrs") {
    throw validation_error("unsupported two-body convention: " + convention);
  }

  if (doc.contains("core_indices")) {
    for (const auto& v : doc.at("core_indices")) {
      const int idx = v.get<int>();
      if (idx < 0 || idx >= n) throw validation_error("core index out of range");
      model.core_indices.insert(idx);
    }
  }

  model.one_body = parse_matrix(doc.at("h"), n, "h");
  if (!is_hermitian(model.one_body)) {
    throw validation_error("one-body not Hermitian");
  }

  model.two_body.assign(
      static_cast<std::size_t>(n) * n * n * n, 0.0);
  std::vector<char> assigned(model.two_body.size(), 0);
  if (doc.contains("g")) {
    for (const auto& entry : doc.at("g")) {
      if (!entry.is_array() || entry.size() != 5) {
        throw validation_error("g entries must be [p, q, r, s, value]");
      }
      const int p = entry[0].get<int>();
      const int q = entry[1].get<int>();
      const int r = entry[2].get<int>();
      const int s = entry[3].get<int>();
      const double v = entry[4].get<double>();
      for (int idx : {p, q, r, s}) {
        if (idx < 0 || idx >= n) {
          throw validation_error("two-body index out of range");
        }
      }
      for (const auto& im : symmetry_images(p, q, r, s)) {
        const std::size_t flat = static_cast<std::size_t>(
            ((im[0] * n + im[1]) * n + im[2]) * n + im[3]);
        if (assigned[flat] &&
            std::abs(model.two_body[flat] - v) >
                1e-10 * std::max(1.0, std::abs(v))) {
          throw validation_error("two-body symmetry violation");
        }
        model.two_body[flat] = v;
        assigned[flat] = 1;
      }
    }
  }

  if (doc.contains("dipole")) {
    for (const auto& [label, entries] : doc.at("dipole").items()) {
      if (label.size() != 1) {
        throw validation_error("dipole component must be one of x, y, z");
      }
      Matrix m = Matrix::Zero(n, n);
      Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> seen(n, n);
      seen.setZero();
      for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 3) {
          throw validation_error("dipole entries must be [a, b, value]");
        }
        const int a = entry[0].get<int>();
        const int b = entry[1].get<int>();
        const double v = entry[2].get<double>();
        if (a < 0 || a >= n || b < 0 || b >= n) {
          throw validation_error("dipole index out of range");
        }
        if ((seen(a, b) && std::abs(m(a, b).real() - v) > 1e-10) ||
            (seen(b, a) && std::abs(m(b, a).real() - v) > 1e-10)) {
          throw validation_error("dipole Hermiticity violation");
        }
        m(a, b) = v;
        m(b, a) = v;
        seen(a, b) = seen(b, a) = 1;
      }
      model.dipole[label[0]] = m;
    }
  }

  model.validate();
  return model;
}

FermionModel apply_cvs(const FermionModel& model) {
  if (model.core_indices.empty()) {
    throw validation_error("CVS requested but no core orbital");
  }
  FermionModel out = model;
  const int n = model.n_spin_orbitals;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (model.core_indices.count(p) || model.core_indices.count(q) ||
              model.core_indices.count(r) || model.core_indices.count(s)) {
            out.g(p, q, r, s) = 0.0;
          }
        }
  return out;
}

Matrix filter_dipole_to_core(const Matrix& coefficients,
                             const std::set<int>& core) {
  require_hermitian(coefficients, "dipole coefficients");
  Matrix out = Matrix::Zero(coefficients.rows(), coefficients.cols());
  for (Eigen::Index a = 0; a < coefficients.rows(); ++a) {
    for (Eigen::Index b = 0; b < coefficients.cols(); ++b) {
      const bool a_core = core.count(static_cast<int>(a)) > 0;
      const bool b_core = core.count(static_cast<int>(b)) > 0;
      if (a_core != b_core) out(a, b) = coefficients(a, b);
    }
  }
  return out;
}

}  // namespace xasim
