#include "qgd/qgd.hpp"

#include <cmath>

#include "qgd/errors.hpp"
#include "qgd/gates.hpp"

namespace qgd {

namespace {

void check_ancilla(const AncillaPreparation& ancilla, const GradientLcu& g) {
  if (const auto* exact = std::get_if<ExactAncilla>(&ancilla)) {
    if (exact->amplitudes.size() != g.branch_count())
      throw InvalidInput("ancilla amplitude count does not match the LCU");
  } else {
    const auto& circuit = std::get<AncillaCircuit>(ancilla);
    if (circuit.spec.qubits != g.ancilla_qubits())
      throw InvalidInput("ansatz register does not match the LCU ancilla");
  }
}

// Ground-space fidelity; sums over the degenerate eigenspace when present.
double ground_fidelity(const StateVector& work, const SpectrumReport& s) {
  double mass = 0.0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] - s.eigenvalues.front() > 1e-10) break;
    std::complex<double> ov = 0.0;
    for (std::size_t w = 0; w < work.dim(); ++w)
      ov += std::conj(s.eigenvectors(w, i)) * work.amplitude(w);
    mass += std::norm(ov);
  }
  return std::sqrt(mass);
}

double ground_mass(const DensityMatrix& work, const SpectrumReport& s) {
  double mass = 0.0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] - s.eigenvalues.front() > 1e-10) break;
    const Eigen::VectorXcd u = s.eigenvectors.col(i);
    mass += (u.adjoint() * work.matrix() * u).value().real();
  }
  return mass;
}

AnsatzSpec default_ansatz(std::size_t ancilla_qubits) {
  if (ancilla_qubits <= 3) return {ancilla_qubits, 3, AnsatzPattern::RyCz};
  return {ancilla_qubits, 3, AnsatzPattern::RyCry};
}

}  // namespace

StepResult qgd_step(const StateVector& work, const GradientLcu& g,
                    const AncillaPreparation& ancilla) {
  check_ancilla(ancilla, g);
  if (const auto* exact = std::get_if<ExactAncilla>(&ancilla)) {
    StateVector joint =
        StateVector::product_with_ancilla(exact->amplitudes, work);
    apply_block_unitary(joint, g);
    AncillaDisposal d = project_ancilla_onto(joint, exact->amplitudes);
    return {std::move(d.work), d.probability};
  }
  const auto& circuit = std::get<AncillaCircuit>(ancilla);
  const int base = static_cast<int>(g.work_qubits());
  std::vector<double> zero(g.branch_count(), 0.0);
  zero[0] = 1.0;
  StateVector joint = StateVector::product_with_ancilla(zero, work);
  const auto prepare = circuit.spec.circuit(circuit.theta, base);
  joint.apply(prepare);
  apply_block_unitary(joint, g);
  joint.apply(inverse_circuit(prepare));
  ProjectionResult r = project_ancilla_zero(joint, g.ancilla_qubits());
  return {extract_work_register(r.collapsed, g.ancilla_qubits()),
          r.probability};
}

DmStepResult qgd_step(const DensityMatrix& work, const GradientLcu& g,
                      const AncillaPreparation& ancilla, double beta,
                      NoisePlacement placement) {
  check_ancilla(ancilla, g);
  DensityMatrix joint;
  std::vector<GateOp> prepare;
  const bool exact_mode = std::holds_alternative<ExactAncilla>(ancilla);
  if (exact_mode) {
    joint = DensityMatrix::embed_with_ancilla(
        std::get<ExactAncilla>(ancilla).amplitudes, work);
  } else {
    const auto& circuit = std::get<AncillaCircuit>(ancilla);
    joint = DensityMatrix::embed_with_zero_ancilla(work, g.ancilla_qubits());
    prepare = circuit.spec.circuit(circuit.theta,
                                   static_cast<int>(g.work_qubits()));
    joint.apply(prepare);
  }
  joint.apply_block_unitary(g);
  if (!exact_mode) joint.apply(inverse_circuit(prepare));
  if (beta > 0.0 && placement == NoisePlacement::BeforePostSelection)
    joint = depolarize(joint, beta);

  DmProjectionResult r =
      exact_mode
          ? project_ancilla_onto(joint,
                                 std::get<ExactAncilla>(ancilla).amplitudes)
          : project_ancilla_zero(joint, g.ancilla_qubits());
  if (beta > 0.0 && placement == NoisePlacement::AfterPostSelection)
    r.work = depolarize(r.work, beta);
  return {std::move(r.work), r.probability};
}

Trajectory run(const QgdConfig& config) {
  if (config.mu.has_value() == config.epsilon.has_value())
    throw InvalidInput("exactly one of mu / epsilon must be given");
  if (config.max_steps < 1) throw InvalidInput("max_steps must be >= 1");
  if (!(config.convergence_epsilon > 0.0))
    throw InvalidInput("convergence threshold must be positive");
  if (config.noise_beta < 0.0 || config.noise_beta > 1.0)
    throw InvalidInput("noise strength must lie in [0, 1]");

  const double mu =
      config.mu ? *config.mu : rate_from_precision(*config.epsilon).mu;

  Trajectory t;
  t.lcu = GradientLcu::build(config.hamiltonian, mu, config.identity_split);
  t.spectrum = spectrum(config.hamiltonian, mu);

  AncillaPreparation ancilla = ExactAncilla{t.lcu.amplitude_vector()};
  if (config.ancilla_source == AncillaSource::Vqsp) {
    AnsatzSpec spec =
        config.ansatz ? *config.ansatz : default_ansatz(t.lcu.ancilla_qubits());
    if (config.ancilla_theta) {
      ancilla = AncillaCircuit{spec, *config.ancilla_theta};
    } else {
      VqspOptions opts = config.vqsp;
      if (opts.seed == 0) opts.seed = config.seed;
      VqspResult trained = train(spec, t.lcu.amplitude_vector(), opts);
      ancilla = AncillaCircuit{spec, trained.theta_opt};
      t.vqsp = std::move(trained);
    }
  }

  const bool noisy = config.noise_beta > 0.0;
  StateVector pure = config.initial_state;
  DensityMatrix mixed;
  if (noisy) mixed = DensityMatrix::from_pure(pure);

  auto energy_of = [&] {
    return noisy ? expectation(mixed, config.hamiltonian)
                 : expectation(pure, config.hamiltonian);
  };
  auto fidelity_of = [&] {
    return noisy ? std::sqrt(ground_mass(mixed, t.spectrum))
                 : ground_fidelity(pure, t.spectrum);
  };

  double global_prob = 1.0;
  t.records.push_back({0, energy_of(), fidelity_of(), 1.0, 1.0});

  for (int s = 1; s <= config.max_steps; ++s) {
    double local = 0.0;
    if (noisy) {
      DmStepResult r = qgd_step(mixed, t.lcu, ancilla, config.noise_beta,
                                config.noise_placement);
      mixed = std::move(r.state);
      local = r.local_prob;
    } else {
      StepResult r = qgd_step(pure, t.lcu, ancilla);
      pure = std::move(r.state);
      local = r.local_prob;
    }
    global_prob *= local;
    t.records.push_back({s, energy_of(), fidelity_of(), local, global_prob});
    t.steps_executed = s;
    const double diff = std::abs(t.records[s].energy - t.records[s - 1].energy);
    if (s >= 2 && diff <= config.convergence_epsilon) {
      t.converged = true;
      break;
    }
  }

  t.final_energy = t.records.back().energy;
  t.final_fidelity = t.records.back().fidelity;
  if (noisy) {
    t.final_fidelity_sq = ground_mass(mixed, t.spectrum);
    t.final_state = std::move(mixed);
  } else {
    t.final_fidelity_sq = t.final_fidelity * t.final_fidelity;
    t.final_state = std::move(pure);
  }
  return t;
}

int noise_readout_step(const Trajectory& noiseless, double epsilon) {
  for (std::size_t s = 2; s < noiseless.records.size(); ++s) {
    const double diff = std::abs(noiseless.records[s].energy -
                                 noiseless.records[s - 1].energy);
    if (diff <= 2.0 * epsilon) return static_cast<int>(s);
  }
  return noiseless.steps_executed;
}

SamplingBound sampling_bound(const GradientLcu& g, double initial_overlap,
                             double lambda0) {
  if (!(initial_overlap > 0.0) || initial_overlap > 1.0)
    throw InvalidInput("initial overlap must lie in (0, 1]");
  if (lambda0 == 0.0) throw InvalidInput("dominant magnitude must be nonzero");
  const double denom =
      lambda0 * lambda0 * initial_overlap * initial_overlap;
  return {g.normalizer() / denom,
          g.normalizer() * g.normalizer() / denom};
}

}  // namespace qgd
