#pragma once

#include "esdqec/linalg.hpp"
#include "esdqec/recovered_state.hpp"
#include "esdqec/states.hpp"

#include <array>
#include <vector>

namespace esdqec {

/// One [4,1] amplitude-damping block: a single logical qubit in four physical
/// qubits, again with complement-pair codewords. The block's syndrome
/// measurement, recovery and decoding are exposed in Kraus form: five success
/// branches (no jump + one per qubit) plus a failure branch that replaces the
/// logical qubit with the maximally mixed state.
class FourOneBlock {
 public:
  FourOneBlock();

  static constexpr int kPhysicalQubits = 4;
  static constexpr Eigen::Index kDim = 16;
  static constexpr int kSyndromes = 5;
  static constexpr int kSuccessKraus = 5;   ///< one 2x16 operator per syndrome
  static constexpr int kFailureKraus = 12;  ///< 6 complement vectors x 2 logical targets

  const std::array<StateVector, 2>& codewords() const { return codewords_; }

  /// Orthonormal basis vector `logical` of syndrome subspace `syndrome`
  /// (0 = code space, k in 1..4 = jump on physical qubit k-1).
  const StateVector& recovery_vector(int syndrome, int logical) const;

  /// Orthonormal basis of the 6-dimensional complement of the syndrome spaces.
  const std::array<StateVector, 6>& failure_basis() const { return failure_basis_; }

  /// All 17 Kraus operators (success first) mapping the 16-dimensional block
  /// onto its decoded logical qubit. Together they satisfy sum K^dagger K = I,
  /// so block recovery is trace preserving by construction.
  const std::vector<ComplexMatrix>& kraus_to_logical() const { return kraus_; }

  /// P_0..P_4 followed by the failure projector.
  std::array<ComplexMatrix, 6> syndrome_projectors() const;

 private:
  std::array<StateVector, 2> codewords_;
  std::array<std::array<StateVector, 2>, kSyndromes> recovery_;
  std::array<StateVector, 6> failure_basis_;
  std::vector<ComplexMatrix> kraus_;
};

/// Two [4,1] blocks side by side: each logical qubit is encoded, damped and
/// recovered strictly locally, giving the 8-qubit comparison pipeline.
class FourOneLocalCode {
 public:
  FourOneLocalCode();
  static const FourOneLocalCode& instance();

  static constexpr int kPhysicalQubits = 8;
  static constexpr Eigen::Index kDim = 256;

  const FourOneBlock& block() const { return block_; }

  StateVector encode(const TwoQubitPure& state) const;

  /// Joint recovery: the first block's Kraus set lifted to qubits 0..3, then
  /// the second block's lifted to qubits 4..7. success_weight is the mass on
  /// which both blocks reported a correctable syndrome.
  RecoveredState measure_and_recover(const DensityOperator& rho) const;

  /// Same map restricted to a normalized pure input (cheaper).
  RecoveredState measure_and_recover(const StateVector& psi) const;

 private:
  FourOneBlock block_;
  std::vector<ComplexMatrix> lifted_first_;   ///< K (x) I_16, 32 x 256
  std::vector<ComplexMatrix> lifted_second_;  ///< I_2 (x) K, 4 x 32
};

}  // namespace esdqec
