#include "qgd/models.hpp"

#include <string>

#include "qgd/errors.hpp"

namespace qgd {

StateVector ModelPreset::initial_state() const {
  StateVector s = StateVector::zero_state(hamiltonian.num_qubits());
  s.apply(initial_circuit);
  return s;
}

namespace {

// The preparation circuit of the two-qubit initial state: a CNOT followed
// by two Ry rotations per site. The rotation pairs land on the sites in
// reverse slot order; that assignment is the one reproducing the reference
// overlap 0.3186 with the deuteron ground state (the same-order one gives
// 0.12). Site 1 = qubit 1 (msb), site 2 = qubit 0.
std::vector<GateOp> two_qubit_initial_circuit() {
  constexpr double a1 = 0.3692, a2 = 0.1112, a3 = 0.7803, a4 = 0.3897;
  return {
      cnot(1, 0),
      ry(0, a2), ry(0, a1),   // site 2
      ry(1, a4), ry(1, a3),   // site 1
  };
}

}  // namespace

ModelPreset deuteron() {
  ModelPreset p;
  p.name = "deuteron";
  p.hamiltonian = PauliHamiltonian({
      {5.907, "II"},
      {0.2183, "ZI"},
      {-6.125, "IZ"},
      {-2.143, "XX"},
      {-2.143, "YY"},
  });
  p.initial_circuit = two_qubit_initial_circuit();
  p.identity_split = {0.2, 0.3, 0.5};
  p.ansatz = {3, 3, AnsatzPattern::RyCz};
  p.reference.ground_energy = -1.7485;
  p.reference.initial_overlap_sq = 0.3186;
  return p;
}

StateVector deuteron_initial_state() { return deuteron().initial_state(); }

ModelPreset heisenberg(std::size_t n, double J, double h) {
  if (n < 2) throw InvalidInput("Heisenberg chain needs at least two sites");
  std::vector<PauliTerm> terms;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (char letter : {'X', 'Y', 'Z'}) {
      std::string s(n, 'I');
      s[j] = letter;
      s[j + 1] = letter;
      terms.push_back({-J, std::move(s)});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::string s(n, 'I');
    s[j] = 'Z';
    terms.push_back({-h, std::move(s)});
  }
  ModelPreset p;
  p.name = "heisenberg" + std::to_string(n);
  p.hamiltonian = PauliHamiltonian(std::move(terms));
  p.identity_split = {0.2, 0.4, 0.4};
  return p;
}

StateVector heisenberg_initial_state(std::size_t n,
                                     std::span<const double> alphas) {
  if (alphas.size() != n)
    throw InvalidInput("need one rotation angle per site");
  StateVector s = StateVector::zero_state(n);
  for (std::size_t site = 1; site <= n; ++site)
    s.apply(ry(static_cast<int>(n - site), alphas[site - 1]));
  return s;
}

ModelPreset heisenberg2() {
  ModelPreset p = heisenberg(2, 1.0, 0.1);
  p.initial_circuit = two_qubit_initial_circuit();
  p.ansatz = {3, 3, AnsatzPattern::RyCz};
  p.reference.rate_interval_upper = 1.0 / 1.8;
  return p;
}

namespace {

std::vector<GateOp> product_ry_circuit(std::size_t n,
                                       std::span<const double> alphas) {
  std::vector<GateOp> ops;
  for (std::size_t site = 1; site <= n; ++site)
    ops.push_back(ry(static_cast<int>(n - site), alphas[site - 1]));
  return ops;
}

}  // namespace

ModelPreset heisenberg4() {
  ModelPreset p = heisenberg(4, 1.0, 1.0);
  static constexpr double alphas[] = {0.5906, 0.6604, 0.0476, 0.3488};
  p.initial_circuit = product_ry_circuit(4, alphas);
  p.ansatz = {4, 2, AnsatzPattern::RyCry};  // 16 parameters
  return p;
}

ModelPreset heisenberg8() {
  ModelPreset p = heisenberg(8, 1.0, 0.1);
  static constexpr double alphas[] = {0.1079, 0.1822, 0.0991, 0.4898,
                                      0.1932, 0.8959, 0.0991, 0.0442};
  p.initial_circuit = product_ry_circuit(8, alphas);
  p.ansatz = {5, 3, AnsatzPattern::RyCry};  // 30 parameters
  return p;
}

std::optional<ModelPreset> model_by_name(std::string_view name) {
  if (name == "deuteron") return deuteron();
  if (name == "heisenberg2") return heisenberg2();
  if (name == "heisenberg4") return heisenberg4();
  if (name == "heisenberg8") return heisenberg8();
  return std::nullopt;
}

}  // namespace qgd
