#pragma once

#include <Eigen/Dense>

#include <complex>

namespace esdqec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance for structural decisions (Hermiticity, unitarity, positivity).
inline constexpr double kStructuralTol = 1e-10;

/// Absolute tolerance for trace and normalization checks.
inline constexpr double kNormTol = 1e-12;

/// Kronecker product. Block (i, j) of the result is a(i, j) * b, so for
/// register states the left factor owns the most significant bits.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix& m, double tol = kStructuralTol);
bool is_positive_semidefinite(const ComplexMatrix& m, double tol = kStructuralTol);

/// Eigenvalues of a Hermitian matrix in descending order.
/// Throws std::invalid_argument if the input fails the Hermiticity tolerance.
RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tol = kStructuralTol);

/// Unique positive-semidefinite square root of a Hermitian PSD matrix.
/// Eigenvalues in [-tol, 0) are rounding debris and get clamped to zero;
/// anything below -tol throws std::domain_error.
ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol = kStructuralTol);

/// Trace-one Hermitian operator. Construction validates shape, Hermiticity
/// (1e-10) and unit trace (1e-12); positivity is checked on demand because
/// callers in the hot path already guarantee it structurally.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  /// Projector |psi><psi| from a normalized state vector.
  static DensityOperator from_pure(const StateVector& psi);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = kStructuralTol) const;

 private:
  ComplexMatrix matrix_;
};

}  // namespace esdqec
