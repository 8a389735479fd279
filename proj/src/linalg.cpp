#include "esdqec/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace esdqec {

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if (!is_hermitian(h, tol))
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("psd_sqrt: matrix must be square");
  if (!is_hermitian(h, tol))
    throw std::invalid_argument("psd_sqrt: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("psd_sqrt: eigensolver did not converge");
  const RealVector ev = solver.eigenvalues();
  if (ev.minCoeff() < -tol)
    throw std::domain_error("psd_sqrt: matrix has an eigenvalue below -tolerance");
  const RealVector root = ev.cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("DensityOperator: matrix must be square and non-empty");
  if (!is_hermitian(matrix_))
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian within tolerance");
  if (std::abs(matrix_.trace() - Complex(1.0)) > kNormTol)
    throw std::invalid_argument("DensityOperator: trace must equal one within tolerance");
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  if (psi.size() == 0) throw std::invalid_argument("DensityOperator: empty state vector");
  if (std::abs(psi.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("DensityOperator: state vector is not normalized");
  return DensityOperator(psi * psi.adjoint());
}

double DensityOperator::min_eigenvalue() const {
  const RealVector ev = hermitian_eigenvalues(matrix_);
  return ev(ev.size() - 1);
}

bool DensityOperator::is_positive_semidefinite(double tol) const {
  return min_eigenvalue() >= -tol;
}

}  // namespace esdqec
