#include "qgd/density_matrix.hpp"

#include <bit>
#include <cmath>

#include "qgd/errors.hpp"

namespace qgd {

namespace {
constexpr double kPostSelectionFloorValue = 1e-14;
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  DensityMatrix r;
  r.num_qubits_ = psi.num_qubits();
  const auto amps = psi.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), amps.size());
  r.m_ = v * v.adjoint();
  return r;
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() ||
      !std::has_single_bit(static_cast<std::size_t>(m.rows())))
    throw InvalidInput("density matrix must be square with power-of-two size");
  DensityMatrix r;
  r.num_qubits_ = std::bit_width(static_cast<std::size_t>(m.rows())) - 1;
  r.m_ = std::move(m);
  return r;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  DensityMatrix r;
  r.num_qubits_ = num_qubits;
  const std::size_t dim = std::size_t{1} << num_qubits;
  r.m_ = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return r;
}

DensityMatrix DensityMatrix::embed_with_zero_ancilla(const DensityMatrix& rho,
                                                     std::size_t k) {
  DensityMatrix r;
  r.num_qubits_ = rho.num_qubits_ + k;
  const std::size_t dim = rho.dim() << k;
  r.m_ = Eigen::MatrixXcd::Zero(dim, dim);
  r.m_.topLeftCorner(rho.dim(), rho.dim()) = rho.m_;
  return r;
}

DensityMatrix DensityMatrix::embed_with_ancilla(std::span<const double> anc,
                                                const DensityMatrix& rho) {
  if (!std::has_single_bit(anc.size()))
    throw InvalidInput("ancilla amplitude count must be a power of two");
  DensityMatrix r;
  const std::size_t k = std::bit_width(anc.size()) - 1;
  r.num_qubits_ = rho.num_qubits_ + k;
  const std::size_t wd = rho.dim();
  r.m_ = Eigen::MatrixXcd::Zero(wd * anc.size(), wd * anc.size());
  for (std::size_t a = 0; a < anc.size(); ++a)
    for (std::size_t b = 0; b < anc.size(); ++b)
      if (anc[a] != 0.0 && anc[b] != 0.0)
        r.m_.block(a * wd, b * wd, wd, wd) = (anc[a] * anc[b]) * rho.m_;
  return r;
}

// rho -> U rho U^dag as two column passes: U rho, adjoint, U (.), adjoint.
void DensityMatrix::apply(const GateOp& op) {
  const std::size_t d = dim();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < d; ++c) {
      std::span<std::complex<double>> col(m_.col(c).data(), d);
      detail::apply_gate_span(col, num_qubits_, op);
    }
    m_.adjointInPlace();
  }
}

void DensityMatrix::apply(std::span<const GateOp> circuit) {
  for (const auto& op : circuit) apply(op);
}

void DensityMatrix::apply_block_unitary(const GradientLcu& g) {
  const std::size_t d = dim();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < d; ++c) {
      std::span<std::complex<double>> col(m_.col(c).data(), d);
      detail::apply_block_unitary_span(col, g);
    }
    m_.adjointInPlace();
  }
}

double DensityMatrix::trace_real() const { return m_.trace().real(); }

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

bool DensityMatrix::is_valid(double tol) const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m_.trace().real() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > -tol;
}

void apply_gate(DensityMatrix& rho, const GateOp& op) { rho.apply(op); }

void apply_block_unitary(DensityMatrix& rho, const GradientLcu& g) {
  rho.apply_block_unitary(g);
}

DensityMatrix depolarize(const DensityMatrix& rho, double beta) {
  if (beta < 0.0 || beta > 1.0)
    throw InvalidInput("depolarizing strength must lie in [0, 1]");
  DensityMatrix out = rho;
  const double dim = static_cast<double>(rho.dim());
  out.matrix() = (1.0 - beta) * rho.matrix() +
                 (beta / dim) * Eigen::MatrixXcd::Identity(rho.dim(), rho.dim());
  return out;
}

DmProjectionResult project_ancilla_zero(const DensityMatrix& rho,
                                        std::size_t k) {
  if (k > rho.num_qubits()) throw InvalidInput("ancilla larger than register");
  const std::size_t wd = std::size_t{1} << (rho.num_qubits() - k);
  Eigen::MatrixXcd block = rho.matrix().topLeftCorner(wd, wd);
  const double p = block.trace().real();
  if (p < kPostSelectionFloorValue)
    throw PostSelectionFloor("post-selection probability below 1e-14");
  return {p, DensityMatrix::from_matrix(block / p)};
}

DmProjectionResult project_ancilla_onto(const DensityMatrix& rho,
                                        std::span<const double> bra) {
  if (!std::has_single_bit(bra.size()))
    throw InvalidInput("bra amplitude count must be a power of two");
  const std::size_t k = std::bit_width(bra.size()) - 1;
  if (k > rho.num_qubits()) throw InvalidInput("ancilla larger than register");
  const std::size_t wd = std::size_t{1} << (rho.num_qubits() - k);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(wd, wd);
  for (std::size_t a = 0; a < bra.size(); ++a)
    for (std::size_t b = 0; b < bra.size(); ++b)
      if (bra[a] != 0.0 && bra[b] != 0.0)
        block += (bra[a] * bra[b]) * rho.matrix().block(a * wd, b * wd, wd, wd);
  const double p = block.trace().real();
  if (p < kPostSelectionFloorValue)
    throw PostSelectionFloor("post-selection probability below 1e-14");
  return {p, DensityMatrix::from_matrix(block / p)};
}

double expectation(const DensityMatrix& rho, const PauliHamiltonian& h) {
  if (h.num_qubits() != rho.num_qubits())
    throw InvalidInput("Hamiltonian and state dimensions do not match");
  std::complex<double> acc = 0.0;
  const std::size_t dim = rho.dim();
  for (const auto& t : h.terms()) {
    const PauliAction a = compile_pauli(t.letters, h.num_qubits());
    std::complex<double> term = 0.0;
    for (std::uint64_t w = 0; w < dim; ++w)
      term += a.phase(w) * rho.matrix()(w, w ^ a.flip_mask);
    acc += t.coefficient * term;
  }
  if (std::abs(acc.imag()) > 1e-8)
    throw Error("expectation has imaginary residue " +
                std::to_string(acc.imag()));
  return acc.real();
}

double fidelity(const DensityMatrix& rho, const StateVector& b) {
  const auto amps = b.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), amps.size());
  return (v.adjoint() * rho.matrix() * v).value().real();
}

}  // namespace qgd
