#include "esdqec/states.hpp"

#include <cmath>
#include <stdexcept>

namespace esdqec {

std::string to_string(Family family) {
  switch (family) {
    case Family::phi: return "phi";
    case Family::psi: return "psi";
    case Family::zeta: return "zeta";
    case Family::xi: return "xi";
  }
  throw std::invalid_argument("to_string: unknown family");
}

Family family_from_string(std::string_view name) {
  if (name == "phi") return Family::phi;
  if (name == "psi") return Family::psi;
  if (name == "zeta") return Family::zeta;
  if (name == "xi") return Family::xi;
  throw std::invalid_argument("family_from_string: expected phi, psi, zeta or xi");
}

TwoQubitPure::TwoQubitPure(const Eigen::Vector4cd& amplitudes) : amps_(amplitudes) {
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("TwoQubitPure: amplitudes are not normalized");
}

Complex TwoQubitPure::amplitude(int basis_index) const {
  if (basis_index < 0 || basis_index > 3)
    throw std::out_of_range("TwoQubitPure: basis index out of range");
  return amps_(basis_index);
}

TwoQubitPure make_family_state(const StateFamily& spec) {
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta))
    throw std::invalid_argument("make_family_state: angles must be finite");
  const Complex main = std::cos(spec.alpha);
  const Complex phased = std::polar(std::sin(spec.alpha), spec.beta);
  Eigen::Vector4cd amps = Eigen::Vector4cd::Zero();
  switch (spec.family) {
    case Family::phi:
      amps(3) = main;    // |11>
      amps(0) = phased;  // |00>
      break;
    case Family::psi:
      amps(2) = main;    // |10>
      amps(1) = phased;  // |01>
      break;
    case Family::zeta:
      amps(1) = main;    // |01>
      amps(0) = phased;  // |00>
      break;
    case Family::xi:
      amps(3) = main;    // |11>
      amps(2) = phased;  // |10>
      break;
  }
  return TwoQubitPure(amps);
}

TwoQubitPure make_family_state(Family family, double alpha, double beta) {
  return make_family_state(StateFamily{family, alpha, beta});
}

TwoQubitPure make_general_state(double alpha, double beta_mix, double delta, double eps1,
                                double eps2, double eps3) {
  for (double angle : {alpha, beta_mix, delta, eps1, eps2, eps3})
    if (!std::isfinite(angle))
      throw std::invalid_argument("make_general_state: angles must be finite");
  const double cd = std::cos(delta);
  const double sd = std::sin(delta);
  Eigen::Vector4cd amps;
  amps(3) = std::cos(alpha) * cd;
  amps(0) = std::polar(std::sin(alpha) * cd, eps1);
  amps(2) = std::polar(std::cos(beta_mix) * sd, eps2);
  amps(1) = std::polar(std::sin(beta_mix) * sd, eps3);
  return TwoQubitPure(amps);
}

}  // namespace esdqec
