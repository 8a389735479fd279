#pragma once

#include "esdqec/linalg.hpp"

#include <string>
#include <string_view>

namespace esdqec {

/// The four one-parameter families of two-qubit pure states under study:
///   phi  = cos(a)|11> + e^{ib} sin(a)|00>   (entangled, both excited vs none)
///   psi  = cos(a)|10> + e^{ib} sin(a)|01>   (entangled, single excitation)
///   zeta = cos(a)|01> + e^{ib} sin(a)|00>   (product)
///   xi   = cos(a)|11> + e^{ib} sin(a)|10>   (product)
enum class Family { phi, psi, zeta, xi };

std::string to_string(Family family);
Family family_from_string(std::string_view name);

struct StateFamily {
  Family family = Family::phi;
  double alpha = 0.0;  ///< mixing angle, radians
  double beta = 0.0;   ///< relative phase, radians
};

/// Normalized two-qubit pure state. Amplitudes are ordered |00>, |01>, |10>,
/// |11>, with the first qubit as the most significant bit.
class TwoQubitPure {
 public:
  explicit TwoQubitPure(const Eigen::Vector4cd& amplitudes);

  const Eigen::Vector4cd& amplitudes() const { return amps_; }
  Complex amplitude(int basis_index) const;
  StateVector vector() const { return amps_; }
  DensityOperator density() const { return DensityOperator::from_pure(vector()); }

 private:
  Eigen::Vector4cd amps_;
};

TwoQubitPure make_family_state(const StateFamily& spec);
TwoQubitPure make_family_state(Family family, double alpha, double beta = 0.0);

/// Fully general pure state
///   cos(a)cos(d)|11> + e^{ie1} sin(a)cos(d)|00>
///   + e^{ie2} cos(b)sin(d)|10> + e^{ie3} sin(b)sin(d)|01>.
/// The four families are the d = 0 / d = pi/2 slices with one phase kept.
TwoQubitPure make_general_state(double alpha, double beta_mix, double delta, double eps1,
                                double eps2, double eps3);

}  // namespace esdqec
