#include "esdqec/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace esdqec {

namespace {

// Distance between adjacent basis indices that differ only in `qubit`.
Eigen::Index qubit_stride(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("qubit index out of range");
  return Eigen::Index(1) << (n_qubits - 1 - qubit);
}

}  // namespace

int qubit_count(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("register dimension must be a power of two");
  int n = 0;
  while ((Eigen::Index(1) << n) < dim) ++n;
  return n;
}

KrausPair single_qubit_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("single_qubit_kraus: gamma must lie in [0, 1]");
  KrausPair k;
  k.no_jump << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
  k.jump << 0.0, std::sqrt(gamma), 0.0, 0.0;
  return k;
}

DampingChannel::DampingChannel(double gamma, int n_qubits) : gamma_(gamma), n_qubits_(n_qubits) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("DampingChannel: gamma must lie in [0, 1]");
  if (n_qubits < 1 || n_qubits > 8)
    throw std::invalid_argument("DampingChannel: qubit count must lie in [1, 8]");
}

StateVector apply_single_qubit(const Eigen::Matrix2cd& op, const StateVector& psi, int qubit) {
  const Eigen::Index dim = psi.size();
  const int n = qubit_count(dim);
  const Eigen::Index stride = qubit_stride(n, qubit);
  StateVector out(dim);
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & stride) continue;
    const Eigen::Index upper = base | stride;
    out(base) = op(0, 0) * psi(base) + op(0, 1) * psi(upper);
    out(upper) = op(1, 0) * psi(base) + op(1, 1) * psi(upper);
  }
  return out;
}

ComplexMatrix conjugate_single_qubit(const Eigen::Matrix2cd& op, const ComplexMatrix& m,
                                     int qubit) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim) throw std::invalid_argument("conjugate_single_qubit: matrix must be square");
  const int n = qubit_count(dim);
  const Eigen::Index stride = qubit_stride(n, qubit);

  // Rows first (K m), then columns (... K^dagger).
  ComplexMatrix t(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (r & stride) continue;
    const Eigen::Index r1 = r | stride;
    t.row(r) = op(0, 0) * m.row(r) + op(0, 1) * m.row(r1);
    t.row(r1) = op(1, 0) * m.row(r) + op(1, 1) * m.row(r1);
  }
  ComplexMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c & stride) continue;
    const Eigen::Index c1 = c | stride;
    out.col(c) = std::conj(op(0, 0)) * t.col(c) + std::conj(op(0, 1)) * t.col(c1);
    out.col(c1) = std::conj(op(1, 0)) * t.col(c) + std::conj(op(1, 1)) * t.col(c1);
  }
  return out;
}

DensityOperator apply_damping(const DensityOperator& rho, const DampingChannel& channel) {
  if (rho.dim() != channel.dim())
    throw std::invalid_argument("apply_damping: state and channel dimensions differ");
  const KrausPair k = single_qubit_kraus(channel.gamma());
  ComplexMatrix m = rho.matrix();
  for (int q = 0; q < channel.n_qubits(); ++q)
    m = conjugate_single_qubit(k.no_jump, m, q) + conjugate_single_qubit(k.jump, m, q);
  return DensityOperator(std::move(m));
}

StateVector apply_lowering(const StateVector& psi, int qubit) {
  Eigen::Matrix2cd lower;
  lower << 0.0, 1.0, 0.0, 0.0;
  return apply_single_qubit(lower, psi, qubit);
}

}  // namespace esdqec
