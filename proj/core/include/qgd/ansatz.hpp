#pragma once

#include <span>
#include <vector>

#include "qgd/gates.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/**
 * Hardware-efficient circuit templates.
 *  - RyCz: per layer, one Ry per qubit followed by a ring of CZ entanglers
 *    (a single CZ for two qubits, none for one). L*k parameters.
 *  - RyCry: per layer, one Ry per qubit followed by a ring of neighbour
 *    controlled-Ry gates, each parameterised. L*2k parameters.
 */
enum class AnsatzPattern { RyCz, RyCry };

struct AnsatzSpec {
  std::size_t qubits = 0;
  std::size_t layers = 0;
  AnsatzPattern pattern = AnsatzPattern::RyCz;

  std::size_t parameter_count() const;
  /** Gate list with qubit indices offset by `base_qubit`. */
  std::vector<GateOp> circuit(std::span<const double> theta,
                              int base_qubit = 0) const;
};

/** U(theta)|0...0> on a standalone `spec.qubits` register. */
StateVector build_ansatz_state(const AnsatzSpec& spec,
                               std::span<const double> theta);

}  // namespace qgd
