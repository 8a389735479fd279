#include "esdqec/code41.hpp"

#include "esdqec/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace esdqec {

namespace {

constexpr unsigned kCodewordKets[2][2] = {
    {0b0000u, 0b1111u},  // |0>_L
    {0b0011u, 0b1100u},  // |1>_L
};

}  // namespace

FourOneBlock::FourOneBlock() {
  const double amp = 1.0 / std::sqrt(2.0);
  for (int b = 0; b < 2; ++b) {
    StateVector v = StateVector::Zero(kDim);
    v(kCodewordKets[b][0]) = amp;
    v(kCodewordKets[b][1]) = amp;
    codewords_[b] = v;
  }

  recovery_[0] = codewords_;
  for (int q = 0; q < kPhysicalQubits; ++q)
    for (int b = 0; b < 2; ++b) {
      StateVector w = apply_lowering(codewords_[b], q);
      recovery_[q + 1][b] = w / w.norm();
    }

  // Complete the ten success vectors to an orthonormal basis; the six extra
  // columns of Q span the failure subspace.
  ComplexMatrix success(kDim, 2 * kSyndromes);
  for (int k = 0; k < kSyndromes; ++k)
    for (int b = 0; b < 2; ++b) success.col(2 * k + b) = recovery_[k][b];
  const Eigen::HouseholderQR<ComplexMatrix> qr(success);
  const ComplexMatrix q = qr.householderQ();
  for (int f = 0; f < 6; ++f) failure_basis_[f] = q.col(2 * kSyndromes + f);
  for (int f = 0; f < 6; ++f) {
    for (int k = 0; k < kSyndromes; ++k)
      for (int b = 0; b < 2; ++b)
        if (std::abs(failure_basis_[f].dot(recovery_[k][b])) > 1e-12)
          throw std::logic_error("FourOneBlock: failure basis overlaps a syndrome space");
    for (int g = 0; g < 6; ++g) {
      const Complex overlap = failure_basis_[f].dot(failure_basis_[g]);
      if (std::abs(overlap - (f == g ? 1.0 : 0.0)) > 1e-12)
        throw std::logic_error("FourOneBlock: failure basis is not orthonormal");
    }
  }

  // Success branch k: decode syndrome space k back onto the logical qubit.
  for (int k = 0; k < kSyndromes; ++k) {
    ComplexMatrix op = ComplexMatrix::Zero(2, kDim);
    for (int b = 0; b < 2; ++b) op.row(b) = recovery_[k][b].adjoint();
    kraus_.push_back(op);
  }
  // Failure: every complement direction feeds both logical basis states with
  // weight 1/2, i.e. the block collapses to the maximally mixed logical qubit.
  for (int f = 0; f < 6; ++f)
    for (int b = 0; b < 2; ++b) {
      ComplexMatrix op = ComplexMatrix::Zero(2, kDim);
      op.row(b) = failure_basis_[f].adjoint() / std::sqrt(2.0);
      kraus_.push_back(op);
    }

  ComplexMatrix completeness = ComplexMatrix::Zero(kDim, kDim);
  for (const ComplexMatrix& op : kraus_) completeness += op.adjoint() * op;
  if ((completeness - ComplexMatrix::Identity(kDim, kDim)).cwiseAbs().maxCoeff() > 1e-12)
    throw std::logic_error("FourOneBlock: Kraus set is not trace preserving");
}

const StateVector& FourOneBlock::recovery_vector(int syndrome, int logical) const {
  if (syndrome < 0 || syndrome >= kSyndromes)
    throw std::out_of_range("FourOneBlock: syndrome index out of range");
  if (logical < 0 || logical > 1)
    throw std::out_of_range("FourOneBlock: logical index out of range");
  return recovery_[syndrome][logical];
}

std::array<ComplexMatrix, 6> FourOneBlock::syndrome_projectors() const {
  std::array<ComplexMatrix, 6> out;
  ComplexMatrix sum = ComplexMatrix::Zero(kDim, kDim);
  for (int k = 0; k < kSyndromes; ++k) {
    ComplexMatrix p = ComplexMatrix::Zero(kDim, kDim);
    for (int b = 0; b < 2; ++b) p += recovery_[k][b] * recovery_[k][b].adjoint();
    out[k] = p;
    sum += p;
  }
  out[kSyndromes] = ComplexMatrix::Identity(kDim, kDim) - sum;
  return out;
}

FourOneLocalCode::FourOneLocalCode() {
  const ComplexMatrix id16 = ComplexMatrix::Identity(16, 16);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  for (const ComplexMatrix& op : block_.kraus_to_logical()) {
    lifted_first_.push_back(kron(op, id16));
    lifted_second_.push_back(kron(id2, op));
  }
}

const FourOneLocalCode& FourOneLocalCode::instance() {
  static const FourOneLocalCode code;
  return code;
}

StateVector FourOneLocalCode::encode(const TwoQubitPure& state) const {
  StateVector out = StateVector::Zero(kDim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out += state.amplitude(2 * i + j) *
             StateVector(kron(block_.codewords()[i], block_.codewords()[j]));
  return out;
}

RecoveredState FourOneLocalCode::measure_and_recover(const DensityOperator& rho) const {
  if (rho.dim() != kDim)
    throw std::invalid_argument("FourOneLocalCode: expected an eight-qubit density operator");
  const ComplexMatrix& m = rho.matrix();

  // First block: keep the success and failure masses separate so the joint
  // success weight can be read off after the second block acts.
  ComplexMatrix first_success = ComplexMatrix::Zero(32, 32);
  ComplexMatrix first_failure = ComplexMatrix::Zero(32, 32);
  for (std::size_t t = 0; t < lifted_first_.size(); ++t) {
    const ComplexMatrix half = lifted_first_[t] * m;
    ComplexMatrix& sink =
        (t < std::size_t(FourOneBlock::kSuccessKraus)) ? first_success : first_failure;
    sink += half * lifted_first_[t].adjoint();
  }

  Eigen::Matrix4cd logical = Eigen::Matrix4cd::Zero();
  double success = 0.0;
  for (std::size_t t = 0; t < lifted_second_.size(); ++t) {
    const Eigen::Matrix4cd from_success =
        lifted_second_[t] * first_success * lifted_second_[t].adjoint();
    const Eigen::Matrix4cd from_failure =
        lifted_second_[t] * first_failure * lifted_second_[t].adjoint();
    logical += from_success + from_failure;
    if (t < std::size_t(FourOneBlock::kSuccessKraus)) success += from_success.trace().real();
  }
  success = std::clamp(success, 0.0, 1.0);
  return RecoveredState{DensityOperator(ComplexMatrix(logical)), success, 1.0 - success};
}

RecoveredState FourOneLocalCode::measure_and_recover(const StateVector& psi) const {
  if (psi.size() != kDim)
    throw std::invalid_argument("FourOneLocalCode: expected an eight-qubit state vector");
  if (std::abs(psi.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("FourOneLocalCode: state vector is not normalized");
  Eigen::Matrix4cd logical = Eigen::Matrix4cd::Zero();
  double success = 0.0;
  for (std::size_t a = 0; a < lifted_first_.size(); ++a) {
    const StateVector half = lifted_first_[a] * psi;
    for (std::size_t b = 0; b < lifted_second_.size(); ++b) {
      const Eigen::Vector4cd out = lifted_second_[b] * half;
      logical += out * out.adjoint();
      if (a < std::size_t(FourOneBlock::kSuccessKraus) &&
          b < std::size_t(FourOneBlock::kSuccessKraus))
        success += out.squaredNorm();
    }
  }
  success = std::clamp(success, 0.0, 1.0);
  return RecoveredState{DensityOperator(ComplexMatrix(logical)), success, 1.0 - success};
}

}  // namespace esdqec
