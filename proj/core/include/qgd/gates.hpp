#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qgd/gradient_lcu.hpp"

namespace qgd {

enum class GateKind { Ry, Rx, PauliX, PauliY, PauliZ, Hadamard };

/**
 * A single-target gate with an optional list of (control qubit, required
 * value) pairs. Qubit q addresses bit (1 << q); the projective circuits
 * place ancilla qubits above the work register.
 */
struct GateOp {
  GateKind kind = GateKind::PauliX;
  double angle = 0.0;
  int target = 0;
  std::vector<std::pair<int, bool>> controls;

  /** 2x2 kernel of the uncontrolled single-qubit action. */
  void kernel(std::complex<double> out[2][2]) const;
  /** Same gate with inverted rotation sense (self-inverse kinds unchanged). */
  GateOp inverse() const;
};

GateOp ry(int target, double angle);
GateOp rx(int target, double angle);
GateOp pauli_x(int target);
GateOp pauli_y(int target);
GateOp pauli_z(int target);
GateOp hadamard(int target);
GateOp cnot(int control, int target);
GateOp cz(int a, int b);
GateOp controlled_ry(int control, int target, double angle);
/** Adds `controls` to `base` (control-on-one unless the flag says zero). */
GateOp with_controls(GateOp base, std::span<const std::pair<int, bool>> controls);

/** Reversed gate list with every rotation angle negated. */
std::vector<GateOp> inverse_circuit(std::span<const GateOp> circuit);

/**
 * Gate-level lowering of the block unitary Lambda G = sum_k |k><k| (x) s_k P_k
 * over `ancilla + work` qubits: one k-controlled single-qubit Pauli per
 * non-identity letter, and a k-controlled Rx(2pi) realising s_k = -1.
 * Ancilla bit carrying the most significant digit of k sits on top.
 */
std::vector<GateOp> lower_block_unitary(const GradientLcu& g);

namespace detail {
/** Applies `op` to `amps` viewed as a `num_qubits` register. */
void apply_gate_span(std::span<std::complex<double>> amps,
                     std::size_t num_qubits, const GateOp& op);
/** Applies sign * P (compiled action) to a contiguous 2^n block. */
void apply_pauli_span(std::span<std::complex<double>> amps,
                      const PauliAction& action, int sign);
/** Block-diagonal action of the LCU on a joint (ancilla+work) register. */
void apply_block_unitary_span(std::span<std::complex<double>> amps,
                              const GradientLcu& g);
}  // namespace detail

}  // namespace qgd
