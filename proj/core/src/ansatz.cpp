#include "qgd/ansatz.hpp"

#include "qgd/errors.hpp"

namespace qgd {

std::size_t AnsatzSpec::parameter_count() const {
  switch (pattern) {
    case AnsatzPattern::RyCz:
      return layers * qubits;
    case AnsatzPattern::RyCry:
      return layers * 2 * qubits;
  }
  return 0;
}

std::vector<GateOp> AnsatzSpec::circuit(std::span<const double> theta,
                                        int base_qubit) const {
  if (theta.size() != parameter_count())
    throw InvalidInput("parameter vector length " +
                       std::to_string(theta.size()) + " does not match " +
                       std::to_string(parameter_count()));
  if (pattern == AnsatzPattern::RyCry && qubits < 2)
    throw InvalidInput("controlled-Ry pattern needs at least two qubits");
  std::vector<GateOp> ops;
  const int k = static_cast<int>(qubits);
  std::size_t idx = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    for (int q = 0; q < k; ++q)
      ops.push_back(ry(base_qubit + q, theta[idx++]));
    switch (pattern) {
      case AnsatzPattern::RyCz:
        if (k == 2) {
          ops.push_back(cz(base_qubit, base_qubit + 1));
        } else if (k > 2) {
          for (int q = 0; q < k; ++q)
            ops.push_back(cz(base_qubit + q, base_qubit + (q + 1) % k));
        }
        break;
      case AnsatzPattern::RyCry:
        for (int q = 0; q < k; ++q)
          ops.push_back(controlled_ry(base_qubit + q,
                                      base_qubit + (q + 1) % k,
                                      theta[idx++]));
        break;
    }
  }
  return ops;
}

StateVector build_ansatz_state(const AnsatzSpec& spec,
                               std::span<const double> theta) {
  StateVector psi = StateVector::zero_state(spec.qubits);
  psi.apply(spec.circuit(theta));
  return psi;
}

}  // namespace qgd
