#pragma once

#include "esdqec/linalg.hpp"
#include "esdqec/recovered_state.hpp"
#include "esdqec/states.hpp"

#include <array>

namespace esdqec {

/// Non-local [6,2] amplitude-damping code: both logical qubits live jointly in
/// six physical qubits. Each codeword pairs a basis ket with its bitwise
/// complement, so any single jump lands the state in one of six mutually
/// orthogonal single-excitation-loss subspaces that identify the damped qubit.
class SixTwoCode {
 public:
  SixTwoCode();
  static const SixTwoCode& instance();

  static constexpr int kPhysicalQubits = 6;
  static constexpr Eigen::Index kDim = 64;
  static constexpr int kSyndromes = 7;  ///< no-jump subspace + one per qubit

  /// Logical basis |00>_L, |01>_L, |10>_L, |11>_L.
  const std::array<StateVector, 4>& codewords() const { return codewords_; }

  /// Orthonormal basis vector `logical` of the syndrome-`syndrome` subspace.
  /// Syndrome 0 is the code space itself; syndrome k in 1..6 is the image of
  /// the code space under a jump on physical qubit k-1.
  const StateVector& recovery_vector(int syndrome, int logical) const;

  StateVector encode(const TwoQubitPure& state) const;

  /// P_0..P_6 followed by the failure projector (complement of the rest).
  const std::array<ComplexMatrix, 8>& syndrome_projectors() const { return projectors_; }

  /// Syndrome measurement, conditional recovery and decoding as a single map
  /// onto the two logical qubits. Branch k contributes matrix elements
  /// <R_k,a| rho |R_k,b>; the failure branch contributes its probability
  /// times the maximally mixed logical state.
  RecoveredState measure_and_recover(const DensityOperator& rho) const;

  /// Same map restricted to a normalized pure input (cheaper).
  RecoveredState measure_and_recover(const StateVector& psi) const;

  /// Partial isometry taking |R_k,ij> to |ij>|Bin(k)>, i.e. logical content
  /// onto the first two qubits and the syndrome label onto the last four.
  /// Only the 28-dimensional span of the recovery vectors is in its domain;
  /// it exists to cross-check the projective route above.
  const ComplexMatrix& syndrome_basis_change() const { return basis_change_; }

 private:
  std::array<StateVector, 4> codewords_;
  std::array<std::array<StateVector, 4>, kSyndromes> recovery_;
  std::array<ComplexMatrix, 8> projectors_;
  ComplexMatrix basis_change_;
};

}  // namespace esdqec
