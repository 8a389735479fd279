#include "esdqec/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esdqec {

namespace {

// Eigenvalues of sqrt(rho) rho~ sqrt(rho) below this are exact zeros of a
// rank-deficient product seen through rounding noise; squashing them keeps
// the square root from amplifying 1e-16 debris into 1e-8 concurrence error.
constexpr double kEigenFloor = 1e-13;

Eigen::Matrix4d spin_flip_matrix() {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

}  // namespace

double fidelity(const TwoQubitPure& reference, const DensityOperator& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("fidelity: expected a two-qubit state");
  const StateVector ref = reference.vector();
  const Complex overlap = ref.dot(rho.matrix() * ref);
  if (std::abs(overlap.imag()) > kNormTol)
    throw std::invalid_argument("fidelity: overlap has a non-real residue");
  return std::clamp(overlap.real(), 0.0, 1.0);
}

double concurrence(const DensityOperator& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence: expected a two-qubit state");
  static const Eigen::Matrix4d flip = spin_flip_matrix();
  const Eigen::Matrix4cd r = rho.matrix();
  const Eigen::Matrix4cd flipped = flip * r.conjugate() * flip;
  const Eigen::Matrix4cd root = psd_sqrt(rho.matrix());
  Eigen::Matrix4cd product = root * flipped * root;
  product = Eigen::Matrix4cd(0.5 * (product + product.adjoint()));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(product);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("concurrence: eigensolver did not converge");
  Eigen::Vector4d lambda;  // ascending, lambda_i = sqrt of eigenvalue i
  for (int i = 0; i < 4; ++i) {
    const double ev = solver.eigenvalues()(i);
    lambda(i) = ev < kEigenFloor ? 0.0 : std::sqrt(ev);
  }
  return std::clamp(lambda(3) - lambda(2) - lambda(1) - lambda(0), 0.0, 1.0);
}

namespace {

void check_curve(const std::vector<double>& gammas, const std::vector<double>& values,
                 double slack) {
  if (gammas.size() != values.size())
    throw std::invalid_argument("curve: gamma and value counts differ");
  if (gammas.empty()) throw std::invalid_argument("curve: no samples");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] >= 0.0 && gammas[i] <= 1.0))
      throw std::invalid_argument("curve: gamma outside [0, 1]");
    if (i > 0 && !(gammas[i] > gammas[i - 1]))
      throw std::invalid_argument("curve: gammas must be strictly ascending");
    if (!(values[i] >= -slack && values[i] <= 1.0 + slack))
      throw std::invalid_argument("curve: value outside [0, 1] beyond tolerance");
  }
}

void clamp_values(std::vector<double>& values) {
  for (double& v : values) v = std::clamp(v, 0.0, 1.0);
}

}  // namespace

FidelityCurve make_fidelity_curve(std::vector<double> gammas, std::vector<double> values) {
  check_curve(gammas, values, kNormTol);
  clamp_values(values);
  return FidelityCurve{std::move(gammas), std::move(values)};
}

ConcurrenceCurve make_concurrence_curve(std::vector<double> gammas, std::vector<double> values) {
  check_curve(gammas, values, kConcurrenceZeroTol);
  clamp_values(values);
  return ConcurrenceCurve{std::move(gammas), std::move(values)};
}

double esd_threshold(const std::function<double(double)>& concurrence_at, double tol,
                     double coarse_step) {
  if (!(tol > 0.0)) throw std::invalid_argument("esd_threshold: tol must be positive");
  if (!(coarse_step > 0.0 && coarse_step < 1.0))
    throw std::invalid_argument("esd_threshold: coarse_step must lie in (0, 1)");
  const auto positive = [&](double gamma) { return concurrence_at(gamma) > kConcurrenceZeroTol; };
  if (!positive(0.0))
    throw std::invalid_argument("esd_threshold: state is already separable at gamma = 0");

  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double gamma = static_cast<double>(i) * coarse_step;
    if (gamma >= 1.0) break;
    grid.push_back(gamma);
  }
  std::size_t last_positive = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (positive(grid[i])) last_positive = i;
  if (last_positive + 1 == grid.size()) return 1.0;

  double lo = grid[last_positive];
  double hi = grid[last_positive + 1];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double series_coefficient_gamma2(const std::function<double(double)>& fidelity_at) {
  if (std::abs(fidelity_at(0.0) - 1.0) > kStructuralTol)
    throw std::invalid_argument("series_coefficient_gamma2: fidelity at zero damping must be 1");
  const double h = 1e-3;
  const auto defect = [&](double gamma) { return (1.0 - fidelity_at(gamma)) / (gamma * gamma); };
  // Two Richardson steps cancel the gamma^3 and gamma^4 contributions.
  return (8.0 * defect(h) - 6.0 * defect(2.0 * h) + defect(4.0 * h)) / 3.0;
}

}  // namespace esdqec
