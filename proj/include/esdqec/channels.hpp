#pragma once

#include "esdqec/linalg.hpp"

namespace esdqec {

/// Number of qubits in a register of the given dimension.
/// Throws std::invalid_argument unless dim is a power of two >= 2.
int qubit_count(Eigen::Index dim);

/// Amplitude-damping Kraus pair for one qubit:
///   no_jump = diag(1, sqrt(1 - gamma)),  jump = sqrt(gamma) |0><1|.
struct KrausPair {
  Eigen::Matrix2cd no_jump;
  Eigen::Matrix2cd jump;
};

/// Throws std::invalid_argument unless gamma lies in [0, 1].
KrausPair single_qubit_kraus(double gamma);

/// Independent amplitude damping on every qubit of an n-qubit register with
/// the same jump probability gamma on each qubit. Qubit 0 is the leftmost
/// tensor factor, i.e. the most significant bit of the basis index.
class DampingChannel {
 public:
  DampingChannel(double gamma, int n_qubits);

  double gamma() const { return gamma_; }
  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_qubits_; }

 private:
  double gamma_;
  int n_qubits_;
};

/// Full channel action: the sum over all 2^n jump patterns of
/// (tensor_i E_{mu_i}) rho (tensor_i E_{mu_i})^dagger. The per-qubit maps act
/// on disjoint factors and therefore commute, so the sum is realized one
/// qubit at a time, which is what keeps eight-qubit sweeps cheap.
DensityOperator apply_damping(const DensityOperator& rho, const DampingChannel& channel);

/// Apply a 2x2 operator to one qubit of a register state vector.
StateVector apply_single_qubit(const Eigen::Matrix2cd& op, const StateVector& psi, int qubit);

/// K m K^dagger where K is `op` on `qubit` and identity elsewhere.
ComplexMatrix conjugate_single_qubit(const Eigen::Matrix2cd& op, const ComplexMatrix& m,
                                     int qubit);

/// Lowering operator |0><1| on one qubit. The result is not renormalized.
StateVector apply_lowering(const StateVector& psi, int qubit);

}  // namespace esdqec
