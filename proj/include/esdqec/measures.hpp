#pragma once

#include "esdqec/linalg.hpp"
#include "esdqec/states.hpp"

#include <functional>
#include <vector>

namespace esdqec {

/// Concurrence at or below this value counts as zero. Sits well above
/// eigensolver noise and well below any physical value on the studied curves.
inline constexpr double kConcurrenceZeroTol = 1e-10;

/// Overlap <ref|rho|ref> of a two-qubit state with a pure reference.
/// The imaginary residue must vanish within 1e-12; the real part is clamped
/// into [0, 1].
double fidelity(const TwoQubitPure& reference, const DensityOperator& rho);

/// Wootters concurrence of a two-qubit state, from the eigenvalues of the
/// Hermitian product sqrt(rho) rho~ sqrt(rho) with rho~ the spin-flipped
/// complex conjugate. Result clamped into [0, 1].
double concurrence(const DensityOperator& rho);

struct FidelityCurve {
  std::vector<double> gammas;
  std::vector<double> values;
};

struct ConcurrenceCurve {
  std::vector<double> gammas;
  std::vector<double> values;
};

/// Validate and clamp a sampled fidelity curve: gammas strictly ascending in
/// [0, 1], values in [0, 1] up to 1e-12 slack.
FidelityCurve make_fidelity_curve(std::vector<double> gammas, std::vector<double> values);

/// Same for concurrence, with 1e-10 slack on the value range.
ConcurrenceCurve make_concurrence_curve(std::vector<double> gammas, std::vector<double> values);

/// Smallest gamma* (within tol) past which the curve stays at zero, i.e.
/// concurrence <= 1e-10 for every sampled gamma >= gamma*. Scans a coarse
/// grid over [0, 1) and bisects the last sign change. Returns 1 when the
/// curve is still positive at every sampled gamma below 1; throws if the
/// state is already separable at gamma = 0.
double esd_threshold(const std::function<double(double)>& concurrence_at, double tol = 1e-6,
                     double coarse_step = 1e-3);

/// Coefficient c2 of the small-damping expansion F = 1 - c2 gamma^2 + ...,
/// via Richardson extrapolation of (1 - F)/gamma^2 at gamma = 1e-3, 2e-3 and
/// 4e-3 (exact through the gamma^4 term of F). Requires F(0) = 1.
double series_coefficient_gamma2(const std::function<double(double)>& fidelity_at);

}  // namespace esdqec
