#include "esdqec/code62.hpp"

#include <cmath>
#include <stdexcept>

namespace esdqec {

namespace {

// Codewords: equal superpositions of a ket and its bitwise complement.
constexpr unsigned kCodewordKets[4][2] = {
    {0b000000u, 0b111111u},  // |00>_L
    {0b001001u, 0b110110u},  // |01>_L
    {0b000110u, 0b111001u},  // |10>_L
    {0b110000u, 0b001111u},  // |11>_L
};

// Normalized images of the codewords under a jump on qubit k-1 (row k-1).
// Damping never mixes distinct logical states into the same ket, so each
// image is a computational basis state and the 28 vectors are orthonormal.
constexpr unsigned kOneJumpKets[6][4] = {
    {0b011111u, 0b010110u, 0b011001u, 0b010000u},
    {0b101111u, 0b100110u, 0b101001u, 0b100000u},
    {0b110111u, 0b000001u, 0b110001u, 0b000111u},
    {0b111011u, 0b110010u, 0b000010u, 0b001011u},
    {0b111101u, 0b110100u, 0b000100u, 0b001101u},
    {0b111110u, 0b001000u, 0b111000u, 0b001110u},
};

StateVector basis_ket(Eigen::Index dim, unsigned index) {
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

}  // namespace

SixTwoCode::SixTwoCode() {
  const double amp = 1.0 / std::sqrt(2.0);
  for (int b = 0; b < 4; ++b) {
    StateVector v = StateVector::Zero(kDim);
    v(kCodewordKets[b][0]) = amp;
    v(kCodewordKets[b][1]) = amp;
    codewords_[b] = v;
  }

  recovery_[0] = codewords_;
  for (int k = 1; k < kSyndromes; ++k)
    for (int b = 0; b < 4; ++b) recovery_[k][b] = basis_ket(kDim, kOneJumpKets[k - 1][b]);

  ComplexMatrix sum = ComplexMatrix::Zero(kDim, kDim);
  for (int k = 0; k < kSyndromes; ++k) {
    ComplexMatrix p = ComplexMatrix::Zero(kDim, kDim);
    for (int b = 0; b < 4; ++b) p += recovery_[k][b] * recovery_[k][b].adjoint();
    projectors_[k] = p;
    sum += p;
  }
  projectors_[kSyndromes] = ComplexMatrix::Identity(kDim, kDim) - sum;

  basis_change_ = ComplexMatrix::Zero(kDim, kDim);
  for (int k = 0; k < kSyndromes; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Eigen::Index target = (Eigen::Index(i) << 5) | (Eigen::Index(j) << 4) | k;
        basis_change_.row(target) += recovery_[k][2 * i + j].adjoint();
      }
}

const SixTwoCode& SixTwoCode::instance() {
  static const SixTwoCode code;
  return code;
}

const StateVector& SixTwoCode::recovery_vector(int syndrome, int logical) const {
  if (syndrome < 0 || syndrome >= kSyndromes)
    throw std::out_of_range("SixTwoCode: syndrome index out of range");
  if (logical < 0 || logical > 3)
    throw std::out_of_range("SixTwoCode: logical index out of range");
  return recovery_[syndrome][logical];
}

StateVector SixTwoCode::encode(const TwoQubitPure& state) const {
  StateVector out = StateVector::Zero(kDim);
  for (int b = 0; b < 4; ++b) out += state.amplitude(b) * codewords_[b];
  return out;
}

RecoveredState SixTwoCode::measure_and_recover(const DensityOperator& rho) const {
  if (rho.dim() != kDim)
    throw std::invalid_argument("SixTwoCode: expected a six-qubit density operator");
  const ComplexMatrix& m = rho.matrix();
  Eigen::Matrix4cd logical = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < kSyndromes; ++k) {
    std::array<StateVector, 4> mapped;
    for (int b = 0; b < 4; ++b) mapped[b] = m * recovery_[k][b];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) logical(a, b) += recovery_[k][a].dot(mapped[b]);
  }
  const double success = std::clamp(logical.trace().real(), 0.0, 1.0);
  const double failure = 1.0 - success;
  logical += (failure / 4.0) * Eigen::Matrix4cd::Identity();
  return RecoveredState{DensityOperator(ComplexMatrix(logical)), success, failure};
}

RecoveredState SixTwoCode::measure_and_recover(const StateVector& psi) const {
  if (psi.size() != kDim)
    throw std::invalid_argument("SixTwoCode: expected a six-qubit state vector");
  if (std::abs(psi.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("SixTwoCode: state vector is not normalized");
  Eigen::Matrix4cd logical = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < kSyndromes; ++k) {
    Eigen::Vector4cd a;
    for (int b = 0; b < 4; ++b) a(b) = recovery_[k][b].dot(psi);
    logical += a * a.adjoint();
  }
  const double success = std::clamp(logical.trace().real(), 0.0, 1.0);
  const double failure = 1.0 - success;
  logical += (failure / 4.0) * Eigen::Matrix4cd::Identity();
  return RecoveredState{DensityOperator(ComplexMatrix(logical)), success, failure};
}

}  // namespace esdqec
