#include "qgd/gates.hpp"

#include <cmath>
#include <numbers>

#include "qgd/errors.hpp"

namespace qgd {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

void GateOp::kernel(std::complex<double> out[2][2]) const {
  switch (kind) {
    case GateKind::Ry: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      out[0][0] = c; out[0][1] = -s;
      out[1][0] = s; out[1][1] = c;
      return;
    }
    case GateKind::Rx: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      out[0][0] = c; out[0][1] = -kI * s;
      out[1][0] = -kI * s; out[1][1] = c;
      return;
    }
    case GateKind::PauliX:
      out[0][0] = 0; out[0][1] = 1; out[1][0] = 1; out[1][1] = 0;
      return;
    case GateKind::PauliY:
      out[0][0] = 0; out[0][1] = -kI; out[1][0] = kI; out[1][1] = 0;
      return;
    case GateKind::PauliZ:
      out[0][0] = 1; out[0][1] = 0; out[1][0] = 0; out[1][1] = -1;
      return;
    case GateKind::Hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      out[0][0] = r; out[0][1] = r; out[1][0] = r; out[1][1] = -r;
      return;
    }
  }
  throw Error("unhandled gate kind");
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  if (kind == GateKind::Ry || kind == GateKind::Rx) inv.angle = -angle;
  return inv;
}

GateOp ry(int target, double angle) { return {GateKind::Ry, angle, target, {}}; }
GateOp rx(int target, double angle) { return {GateKind::Rx, angle, target, {}}; }
GateOp pauli_x(int target) { return {GateKind::PauliX, 0.0, target, {}}; }
GateOp pauli_y(int target) { return {GateKind::PauliY, 0.0, target, {}}; }
GateOp pauli_z(int target) { return {GateKind::PauliZ, 0.0, target, {}}; }
GateOp hadamard(int target) { return {GateKind::Hadamard, 0.0, target, {}}; }
GateOp cnot(int control, int target) {
  return {GateKind::PauliX, 0.0, target, {{control, true}}};
}
GateOp cz(int a, int b) { return {GateKind::PauliZ, 0.0, b, {{a, true}}}; }
GateOp controlled_ry(int control, int target, double angle) {
  return {GateKind::Ry, angle, target, {{control, true}}};
}

GateOp with_controls(GateOp base,
                     std::span<const std::pair<int, bool>> controls) {
  base.controls.insert(base.controls.end(), controls.begin(), controls.end());
  return base;
}

std::vector<GateOp> inverse_circuit(std::span<const GateOp> circuit) {
  std::vector<GateOp> inv;
  inv.reserve(circuit.size());
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it)
    inv.push_back(it->inverse());
  return inv;
}

std::vector<GateOp> lower_block_unitary(const GradientLcu& g) {
  const int n = static_cast<int>(g.work_qubits());
  const int kt = static_cast<int>(g.ancilla_qubits());
  std::vector<GateOp> ops;
  for (std::size_t k = 0; k < g.branch_count(); ++k) {
    const LcuBranch& b = g.branches()[k];
    std::vector<std::pair<int, bool>> pattern;
    pattern.reserve(kt);
    for (int a = 0; a < kt; ++a)
      pattern.emplace_back(n + a, ((k >> a) & 1) != 0);

    int first_work_target = -1;
    for (std::size_t j = 0; j < b.letters.size(); ++j) {
      const int target = n - 1 - static_cast<int>(j);
      GateOp op;
      switch (b.letters[j]) {
        case 'I': continue;
        case 'X': op = pauli_x(target); break;
        case 'Y': op = pauli_y(target); break;
        case 'Z': op = pauli_z(target); break;
      }
      if (first_work_target < 0) first_work_target = target;
      ops.push_back(with_controls(std::move(op), pattern));
    }
    if (b.sign < 0) {
      // Rx(2pi) = -I on the first Pauli factor's qubit (qubit 0 for a pure
      // identity branch); composed with the controls it flips the block sign.
      const int target = first_work_target >= 0 ? first_work_target : 0;
      ops.push_back(with_controls(rx(target, 2.0 * std::numbers::pi), pattern));
    }
  }
  return ops;
}

namespace detail {

void apply_gate_span(std::span<std::complex<double>> amps,
                     std::size_t num_qubits, const GateOp& op) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (amps.size() != dim) throw Error("state size does not match qubit count");
  if (op.target < 0 || static_cast<std::size_t>(op.target) >= num_qubits)
    throw InvalidInput("gate target out of range");
  std::uint64_t ctrl_mask = 0, ctrl_value = 0;
  for (auto [q, v] : op.controls) {
    if (q < 0 || static_cast<std::size_t>(q) >= num_qubits)
      throw InvalidInput("gate control out of range");
    if (q == op.target) throw InvalidInput("control equals target");
    ctrl_mask |= 1ULL << q;
    if (v) ctrl_value |= 1ULL << q;
  }
  std::complex<double> u[2][2];
  op.kernel(u);
  const std::uint64_t t_bit = 1ULL << op.target;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & t_bit) continue;
    if ((i & ctrl_mask) != ctrl_value) continue;
    const std::uint64_t j = i | t_bit;
    const std::complex<double> a0 = amps[i], a1 = amps[j];
    amps[i] = u[0][0] * a0 + u[0][1] * a1;
    amps[j] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void apply_pauli_span(std::span<std::complex<double>> amps,
                      const PauliAction& action, int sign) {
  const std::size_t dim = amps.size();
  const double s = static_cast<double>(sign);
  if (action.flip_mask == 0) {
    for (std::uint64_t w = 0; w < dim; ++w) amps[w] *= s * action.phase(w);
    return;
  }
  for (std::uint64_t w = 0; w < dim; ++w) {
    const std::uint64_t v = w ^ action.flip_mask;
    if (v < w) continue;
    const std::complex<double> aw = amps[w], av = amps[v];
    amps[v] = s * action.phase(w) * aw;
    amps[w] = s * action.phase(v) * av;
  }
}

void apply_block_unitary_span(std::span<std::complex<double>> amps,
                              const GradientLcu& g) {
  const std::size_t work_dim = std::size_t{1} << g.work_qubits();
  if (amps.size() != work_dim * g.branch_count())
    throw Error("joint register does not match ancilla + work layout");
  for (std::size_t k = 0; k < g.branch_count(); ++k) {
    const LcuBranch& b = g.branches()[k];
    const PauliAction action = compile_pauli(b.letters, g.work_qubits());
    apply_pauli_span(amps.subspan(k * work_dim, work_dim), action, b.sign);
  }
}

}  // namespace detail

}  // namespace qgd
