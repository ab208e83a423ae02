#include "qgd/baselines.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qgd/errors.hpp"
#include "qgd/gates.hpp"
#include "qgd/nelder_mead.hpp"

namespace qgd {

FqeAncilla FqeAncilla::from_lcu(const GradientLcu& g) {
  FqeAncilla a;
  a.normalizer = g.squared_weight_sum();
  a.amplitudes.reserve(g.branch_count());
  for (const auto& b : g.branches())
    a.amplitudes.push_back(b.weight / std::sqrt(a.normalizer));
  return a;
}

FqeStepResult fqe_step(const StateVector& work, const GradientLcu& g) {
  const FqeAncilla anc = FqeAncilla::from_lcu(g);
  StateVector joint = StateVector::product_with_ancilla(anc.amplitudes, work);
  apply_block_unitary(joint, g);
  const int base = static_cast<int>(g.work_qubits());
  for (std::size_t a = 0; a < g.ancilla_qubits(); ++a)
    joint.apply(hadamard(base + static_cast<int>(a)));
  ProjectionResult r = project_ancilla_zero(joint, g.ancilla_qubits());
  return {extract_work_register(r.collapsed, g.ancilla_qubits()),
          r.probability};
}

bool fqe_probability_monotone(std::span<const double> probs, double slack) {
  for (std::size_t i = 1; i < probs.size(); ++i)
    if (probs[i] + slack < probs[i - 1]) return false;
  return true;
}

namespace {

std::vector<GateOp> vqe_circuit(std::span<const double> gamma, int depth) {
  if (gamma.size() != static_cast<std::size_t>(4 * depth))
    throw InvalidInput("depth-" + std::to_string(depth) +
                       " ansatz takes " + std::to_string(4 * depth) +
                       " parameters");
  std::vector<GateOp> ops;
  for (int d = 0; d < depth; ++d) {
    ops.push_back(ry(1, gamma[4 * d + 0]));
    ops.push_back(ry(0, gamma[4 * d + 1]));
    ops.push_back(cz(1, 0));
    ops.push_back(ry(1, gamma[4 * d + 2]));
    ops.push_back(ry(0, gamma[4 * d + 3]));
  }
  return ops;
}

}  // namespace

double vqe_energy(const PauliHamiltonian& h, std::span<const double> gamma,
                  int depth) {
  if (h.num_qubits() != 2)
    throw InvalidInput("the VQE baseline is wired for two-qubit models");
  StateVector psi = StateVector::zero_state(2);
  psi.apply(vqe_circuit(gamma, depth));
  return expectation(psi, h);
}

VqeResult vqe_run(const PauliHamiltonian& h, const VqeOptions& options) {
  if (options.depth < 1) throw InvalidInput("ansatz depth must be >= 1");
  const std::size_t nparam = 4 * static_cast<std::size_t>(options.depth);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  VqeResult best;
  best.final_energy = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    std::vector<double> gamma0(nparam);
    for (auto& gm : gamma0) gm = angle(rng);

    std::vector<double> history;
    double best_seen = std::numeric_limits<double>::infinity();
    auto observer = [&](double v) {
      best_seen = std::min(best_seen, v);
      history.push_back(best_seen);
    };
    auto cost = [&](std::span<const double> gamma) {
      return vqe_energy(h, gamma, options.depth);
    };

    NelderMeadOptions nm;
    nm.initial_offset = 1.0;
    nm.max_evaluations = options.max_evaluations / 2;
    auto stage = nelder_mead(cost, gamma0, nm, observer);
    nm.initial_offset = 0.1;
    nm.max_evaluations = options.max_evaluations - stage.evaluations;
    auto refined = nelder_mead(cost, stage.best_point, nm, observer);

    if (refined.best_value < best.final_energy) {
      best.final_energy = refined.best_value;
      best.gamma_opt = std::move(refined.best_point);
      best.energy_history = std::move(history);
      best.budget_exhausted =
          stage.evaluations + refined.evaluations >= options.max_evaluations;
    }
  }
  return best;
}

SingleTermStepResult single_term_step(const StateVector& work,
                                      const PauliTerm& term, double delta_t) {
  if (!(delta_t > 0.0)) throw InvalidInput("time step must be positive");
  if (term.letters.size() != work.num_qubits())
    throw InvalidInput("term and state register sizes differ");

  // (I - dt*c*P)|phi> realised as the LCU {1*I, (dt|c|)*(-sign(c) P)} on a
  // single ancilla rotated by 2*arccos(1/sqrt(1+dt|c|)).
  const double weight = std::abs(delta_t * term.coefficient);
  const double scale = 1.0 + weight;
  const PauliAction action =
      compile_pauli(term.letters, work.num_qubits());
  const double sign = term.coefficient > 0.0 ? -1.0 : 1.0;

  std::vector<std::complex<double>> out(work.dim());
  for (std::uint64_t w = 0; w < work.dim(); ++w) out[w] = work.amplitude(w);
  for (std::uint64_t w = 0; w < work.dim(); ++w)
    out[w ^ action.flip_mask] += sign * weight * action.phase(w) *
                                 work.amplitude(w);
  double norm2 = 0.0;
  for (const auto& c : out) norm2 += std::norm(c);
  if (norm2 < 1e-14)
    throw PostSelectionFloor("single-term step annihilated the state");

  SingleTermStepResult r;
  r.prob = norm2 / (scale * scale);
  r.ancilla_angle = 2.0 * std::acos(1.0 / std::sqrt(scale));
  r.state = StateVector::from_amplitudes(std::move(out));
  return r;
}

}  // namespace qgd
