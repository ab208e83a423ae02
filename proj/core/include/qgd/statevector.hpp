#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qgd/gates.hpp"
#include "qgd/gradient_lcu.hpp"
#include "qgd/pauli.hpp"

namespace qgd {

/**
 * Exact pure-state register. Basis index b addresses qubit q at bit
 * (1 << q); when a k-ancilla register rides on top of n work qubits the
 * joint index is (ancilla << n) | work, i.e. the ancilla is the most
 * significant block.
 */
class StateVector {
 public:
  StateVector() = default;

  static StateVector zero_state(std::size_t num_qubits);
  static StateVector from_amplitudes(std::vector<std::complex<double>> amps);
  /** |anc> (x) |work> with real ancilla amplitudes (amplitude injection). */
  static StateVector product_with_ancilla(std::span<const double> ancilla,
                                          const StateVector& work);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::span<std::complex<double>> amplitudes() { return amps_; }
  std::complex<double> amplitude(std::size_t basis) const { return amps_[basis]; }

  void apply(const GateOp& op);
  void apply(std::span<const GateOp> circuit);
  double norm() const;
  void normalize();

  std::complex<double> inner(const StateVector& other) const;

 private:
  std::vector<std::complex<double>> amps_;
  std::size_t num_qubits_ = 0;
};

struct ProjectionResult {
  double probability = 0.0;
  StateVector collapsed;  // same register size, ancilla left in |0...0>
};

struct AncillaDisposal {
  double probability = 0.0;
  StateVector work;  // the n-qubit register after the ancilla is consumed
};

void apply_gate(StateVector& state, const GateOp& op);

/** Block action sum_k |k><k| (x) s_k P_k; ancilla is the leading register. */
void apply_block_unitary(StateVector& state, const GradientLcu& g);

/**
 * Projects the leading `k` ancilla qubits onto |0...0>. Throws
 * PostSelectionFloor when the branch mass is below 1e-14.
 */
ProjectionResult project_ancilla_zero(const StateVector& state, std::size_t k);

/** Contracts the ancilla against a real bra vector (exact |y> disposal). */
AncillaDisposal project_ancilla_onto(const StateVector& state,
                                     std::span<const double> bra);

/** Drops a leading ancilla register known to be exactly |0...0>. */
StateVector extract_work_register(const StateVector& state, std::size_t k);

/** <phi| H |phi>. Throws if the imaginary residue exceeds 1e-8. */
double expectation(const StateVector& state, const PauliHamiltonian& h);

/** sqrt(|<a|b>|^2) for pure states. */
double fidelity(const StateVector& a, const StateVector& b);

/**
 * Measurement statistics in the computational basis. shots == 0 returns the
 * exact Born probabilities, otherwise seeded empirical frequencies.
 */
std::vector<double> sample_distribution(const StateVector& state, long shots,
                                        std::uint64_t seed);

}  // namespace qgd
