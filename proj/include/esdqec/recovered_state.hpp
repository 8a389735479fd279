#pragma once

#include "esdqec/linalg.hpp"

namespace esdqec {

/// Output of one measure-and-recover pass: the decoded two-qubit density
/// operator together with the probability mass that passed through a
/// correctable syndrome versus the failure branch. The weights always sum
/// to one (both clamped into [0, 1]).
struct RecoveredState {
  DensityOperator logical_rho;
  double success_weight = 0.0;
  double failure_weight = 0.0;
};

}  // namespace esdqec
