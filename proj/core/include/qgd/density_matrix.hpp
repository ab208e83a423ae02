#pragma once

#include <span>

#include <Eigen/Dense>

#include "qgd/gates.hpp"
#include "qgd/gradient_lcu.hpp"
#include "qgd/pauli.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/**
 * Exact mixed-state register over num_qubits qubits. Same bit layout as
 * StateVector. Unitaries act as U rho U^dag, evaluated column-wise so the
 * pure-state kernels are reused.
 */
class DensityMatrix {
 public:
  DensityMatrix() = default;

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix from_matrix(Eigen::MatrixXcd m);
  static DensityMatrix maximally_mixed(std::size_t num_qubits);
  /** |0...0><0...0| over k ancilla qubits tensored onto rho. */
  static DensityMatrix embed_with_zero_ancilla(const DensityMatrix& rho,
                                               std::size_t k);
  /** |y><y| (real amplitudes) tensored onto rho. */
  static DensityMatrix embed_with_ancilla(std::span<const double> ancilla,
                                          const DensityMatrix& rho);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

  void apply(const GateOp& op);
  void apply(std::span<const GateOp> circuit);
  void apply_block_unitary(const GradientLcu& g);

  double trace_real() const;
  double purity() const;

  /**
   * Validity check: Hermitian and unit trace within `tol`, eigenvalues
   * above -tol. Used by tests and after channel applications.
   */
  bool is_valid(double tol = 1e-10) const;

 private:
  Eigen::MatrixXcd m_;
  std::size_t num_qubits_ = 0;
};

struct DmProjectionResult {
  double probability = 0.0;
  DensityMatrix work;  // ancilla traced out after the projection
};

void apply_gate(DensityMatrix& rho, const GateOp& op);
void apply_block_unitary(DensityMatrix& rho, const GradientLcu& g);

/** (1-beta) rho + beta I / 2^m. */
DensityMatrix depolarize(const DensityMatrix& rho, double beta);

/** Projects k leading ancilla qubits onto |0...0> and traces them out. */
DmProjectionResult project_ancilla_zero(const DensityMatrix& rho,
                                        std::size_t k);

/** Contracts the ancilla against a real bra vector: <y| rho |y>. */
DmProjectionResult project_ancilla_onto(const DensityMatrix& rho,
                                        std::span<const double> bra);

double expectation(const DensityMatrix& rho, const PauliHamiltonian& h);

/** Tr(|b><b| rho), the squared-overlap form. */
double fidelity(const DensityMatrix& rho, const StateVector& b);

}  // namespace qgd
