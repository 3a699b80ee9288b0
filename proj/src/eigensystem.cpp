#include "xasim/eigensystem.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace xasim {

EigenDecomposition diagonalize_dense(const Matrix& h) {
  require_hermitian(h, "Hamiltonian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("eigendecomposition failed to converge");
  }
  EigenDecomposition eig{solver.eigenvalues(), solver.eigenvectors()};
  // Residual check; skipped above the dimension where the extra matmul would
  // dominate the solve itself.
  if (h.rows() <= 2048) {
    const double scale = std::max(1.0, h.norm());
    const double residual =
        (h * eig.eigenvectors -
         eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>())
            .norm();
    if (residual > 1e-10 * scale * std::sqrt(double(h.rows()))) {
      throw numerical_error("eigendecomposition residual too large");
    }
  }
  return eig;
}

const EigenDecomposition& diagonalize(const HamiltonianModel& h) {
  if (!h.eigendecomposition) {
    h.validate();
    h.eigendecomposition =
        std::make_shared<const EigenDecomposition>(diagonalize_dense(h.dense));
  }
  return *h.eigendecomposition;
}

StateVector time_evolve(const StateVector& psi, const EigenDecomposition& eig,
                        double t) {
  if (!std::isfinite(t)) throw validation_error("evolution time must be finite");
  Vector coeffs = eig.eigenvectors.adjoint() * psi.amplitudes;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(Complex(0.0, -eig.eigenvalues(k) * t));
  }
  return StateVector(psi.n_qubits, eig.eigenvectors * coeffs);
}

namespace {

// Commutes-with-number check: dense H conserves particle number iff every
// matrix element between different-popcount basis states vanishes.
bool conserves_particle_number(const Matrix& h) {
  const Eigen::Index dim = h.rows();
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (std::popcount(static_cast<unsigned long long>(i)) !=
              std::popcount(static_cast<unsigned long long>(j)) &&
          std::abs(h(i, j)) > 1e-10) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

StateVector ground_state(const HamiltonianModel& h) {
  const EigenDecomposition& eig = diagonalize(h);
  if (h.n_electrons < 0 || !conserves_particle_number(h.dense)) {
    return StateVector(h.n_qubits, eig.eigenvectors.col(0));
  }
  // Restrict to the fixed particle-number block and diagonalize there, so a
  // sector-external state can never leak in through degeneracies.
  std::vector<Eigen::Index> sector;
  for (Eigen::Index i = 0; i < h.dense.rows(); ++i) {
    if (std::popcount(static_cast<unsigned long long>(i)) == h.n_electrons) {
      sector.push_back(i);
    }
  }
  if (sector.empty()) {
    throw validation_error("no basis states with the requested electron count");
  }
  Matrix block(sector.size(), sector.size());
  for (std::size_t a = 0; a < sector.size(); ++a)
    for (std::size_t b = 0; b < sector.size(); ++b)
      block(a, b) = h.dense(sector[a], sector[b]);
  EigenDecomposition block_eig = diagonalize_dense(block);
  Vector full = Vector::Zero(h.dense.rows());
  for (std::size_t a = 0; a < sector.size(); ++a) {
    full(sector[a]) = block_eig.eigenvectors(a, 0);
  }
  return StateVector(h.n_qubits, std::move(full));
}

}  // namespace xasim
