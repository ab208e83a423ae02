#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgd/ansatz.hpp"
#include "qgd/gates.hpp"
#include "qgd/pauli.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/** Reference numbers a preset is checked against. */
struct ReferenceValues {
  std::optional<double> ground_energy;
  std::optional<double> initial_overlap_sq;  // |<u0|phi(0)>|^2
  std::optional<double> rate_interval_upper;
};

/**
 * A ready-to-run system: Hamiltonian, initial-state circuit, the identity
 * split used for its LCU, and the ancilla-preparation ansatz matched to the
 * resulting register size.
 */
struct ModelPreset {
  std::string name;
  PauliHamiltonian hamiltonian;
  std::vector<GateOp> initial_circuit;  // acts on |0...0> of n work qubits
  std::vector<double> identity_split;
  AnsatzSpec ansatz;
  ReferenceValues reference;

  StateVector initial_state() const;
};

/**
 * Two-qubit oscillator-basis deuteron Hamiltonian. Site 1 is the most
 * significant work qubit.
 */
ModelPreset deuteron();
StateVector deuteron_initial_state();

/**
 * Open-boundary spin-1/2 Heisenberg chain,
 * -J sum (XX + YY + ZZ) - h sum Z, for n >= 2 sites.
 */
ModelPreset heisenberg(std::size_t n, double J, double h);
/** Product of single-qubit Ry rotations, site i rotated by alphas[i-1]. */
StateVector heisenberg_initial_state(std::size_t n,
                                     std::span<const double> alphas);

ModelPreset heisenberg2();  // n=2, J=1, h=0.1
ModelPreset heisenberg4();  // n=4, J=1, h=1
ModelPreset heisenberg8();  // n=8, J=1, h=0.1

/** Lookup by CLI name: deuteron | heisenberg2 | heisenberg4 | heisenberg8. */
std::optional<ModelPreset> model_by_name(std::string_view name);

}  // namespace qgd
