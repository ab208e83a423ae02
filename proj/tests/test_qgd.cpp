#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qgd/errors.hpp"
#include "qgd/models.hpp"
#include "qgd/qgd.hpp"

using namespace qgd;

namespace {

QgdConfig deuteron_config(double epsilon) {
  const ModelPreset p = deuteron();
  QgdConfig cfg;
  cfg.hamiltonian = p.hamiltonian;
  cfg.initial_state = p.initial_state();
  cfg.epsilon = epsilon;
  cfg.identity_split = p.identity_split;
  cfg.ancilla_source = AncillaSource::Exact;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("step: near-identity operator leaves the state in place") {
  const PauliHamiltonian h = parse_hamiltonian("0.8 XZ\n-0.3 ZX");
  const double split[] = {1.0};
  const GradientLcu g = GradientLcu::build(h, 1e-14, split);
  std::mt19937_64 rng(3);
  const StateVector phi = oracles::random_state(rng, 2);
  const StepResult r = qgd_step(phi, g, ExactAncilla{g.amplitude_vector()});
  CHECK(fidelity(r.state, phi) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.local_prob == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("step: deuteron matches the dense power-method oracle") {
  const ModelPreset p = deuteron();
  const GradientLcu g = GradientLcu::build(p.hamiltonian, 0.05,
                                           p.identity_split);
  const StateVector phi = p.initial_state();
  const StepResult r = qgd_step(phi, g, ExactAncilla{g.amplitude_vector()});
  const Eigen::VectorXcd expect =
      oracles::power_step(oracles::dense_gradient(g), oracles::to_eigen(phi));
  CHECK(fidelity(r.state, oracles::to_state(expect)) >=
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("step: eigenvectors are fixed points with probability (l0/N_y)^2") {
  const ModelPreset p = deuteron();
  const double mu = 0.05;
  const GradientLcu g = GradientLcu::build(p.hamiltonian, mu,
                                           p.identity_split);
  const SpectrumReport s = spectrum(p.hamiltonian, mu);
  const StateVector u0 = s.ground_state();
  const StepResult r = qgd_step(u0, g, ExactAncilla{g.amplitude_vector()});
  CHECK(fidelity(r.state, u0) == doctest::Approx(1.0).epsilon(1e-10));
  const double lam0 = s.gradient_magnitudes[0];
  CHECK(r.local_prob ==
        doctest::Approx(lam0 * lam0 / (g.normalizer() * g.normalizer()))
            .epsilon(1e-10));
}

TEST_CASE("step: the trained circuit ancilla matches the exact one") {
  const ModelPreset p = deuteron();
  const GradientLcu g = GradientLcu::build(p.hamiltonian, 0.05,
                                           p.identity_split);
  VqspOptions opts;
  opts.seed = 7;
  const VqspResult trained = train(p.ansatz, g.amplitude_vector(), opts);
  REQUIRE(trained.final_cost < 1e-8);

  const StateVector phi = p.initial_state();
  const StepResult exact =
      qgd_step(phi, g, ExactAncilla{g.amplitude_vector()});
  const StepResult circuit =
      qgd_step(phi, g, AncillaCircuit{p.ansatz, trained.theta_opt});
  CHECK(fidelity(exact.state, circuit.state) > 1.0 - 1e-6);
  CHECK(std::abs(exact.local_prob - circuit.local_prob) < 1e-5);
}

TEST_CASE("run: deuteron converges for eps = 1e-2, diverges for 1e-1") {
  SUBCASE("eps = 1e-2 reaches the ground state in about forty steps") {
    const Trajectory t = run(deuteron_config(1e-2));
    CHECK(t.converged);
    CHECK(t.steps_executed <= 60);
    CHECK(std::abs(t.final_energy + 1.7485) < 1e-3);
    CHECK(t.final_fidelity >= 0.999);
  }
  SUBCASE("eps = 1e-1 drifts to the dominant excited state") {
    QgdConfig cfg = deuteron_config(1e-1);
    cfg.max_steps = 500;
    const Trajectory t = run(cfg);
    CHECK(std::abs(t.final_energy + 1.7485) > 0.5);
    CHECK(t.spectrum.dominant_index == 3);
    CHECK(t.final_fidelity < 0.1);
  }
}

TEST_CASE("run: heisenberg n=2 rate inside/outside the interval") {
  const ModelPreset p = heisenberg2();
  QgdConfig cfg;
  cfg.hamiltonian = p.hamiltonian;
  cfg.initial_state = p.initial_state();
  cfg.identity_split = p.identity_split;
  cfg.ancilla_source = AncillaSource::Exact;
  cfg.seed = 7;
  SUBCASE("mu = 0.05 converges") {
    cfg.mu = 0.05;
    cfg.max_steps = 500;
    cfg.convergence_epsilon = 1e-10;
    const Trajectory t = run(cfg);
    CHECK(t.final_fidelity >= 0.999);
    CHECK(std::abs(t.final_energy + 1.2) < 1e-2);
  }
  SUBCASE("mu = 0.6124 does not reach the ground state") {
    cfg.mu = 0.6124;
    cfg.max_steps = 500;
    const Trajectory t = run(cfg);
    CHECK(std::abs(t.final_energy + 1.2) > 0.1);
    CHECK(t.final_fidelity < 0.999);
  }
}

TEST_CASE("run: heisenberg chains reach their ground states") {
  for (const ModelPreset& p : {heisenberg4(), heisenberg8()}) {
    QgdConfig cfg;
    cfg.hamiltonian = p.hamiltonian;
    cfg.initial_state = p.initial_state();
    cfg.epsilon = 1e-2;
    cfg.identity_split = p.identity_split;
    cfg.ancilla_source = AncillaSource::Exact;
    cfg.seed = 7;
    cfg.max_steps = 800;
    cfg.convergence_epsilon = 1e-8;
    const Trajectory t = run(cfg);
    CHECK(t.converged);
    CHECK(t.final_fidelity >= 0.999);
    CHECK(std::abs(t.final_energy - t.spectrum.ground_energy()) < 1e-3);
  }
}

TEST_CASE("run: noiseless trajectories equal dense power iteration") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliHamiltonian h =
        oracles::random_hamiltonian(rng, 1 + trial % 4);
    const GradientLcu g = GradientLcu::build(h, 0.03 + 0.1 * u(rng));
    StateVector phi =
        oracles::random_state(rng, static_cast<int>(g.work_qubits()));
    Eigen::VectorXcd ref = oracles::to_eigen(phi);
    const Eigen::MatrixXcd dense = oracles::dense_gradient(g);
    for (int s = 0; s < 12; ++s) {
      const StepResult r = qgd_step(phi, g, ExactAncilla{g.amplitude_vector()});
      phi = r.state;
      ref = oracles::power_step(dense, ref);
      CHECK(fidelity(phi, oracles::to_state(ref)) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("run: local probabilities never decrease (noiseless)") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const PauliHamiltonian h =
        oracles::random_hamiltonian(rng, 1 + trial % 3);
    QgdConfig cfg;
    cfg.hamiltonian = h;
    cfg.initial_state =
        oracles::random_state(rng, static_cast<int>(h.num_qubits()));
    cfg.mu = 0.02 + 0.2 * u(rng);
    cfg.ancilla_source = AncillaSource::Exact;
    cfg.max_steps = 30;
    cfg.convergence_epsilon = 1e-300;
    const Trajectory t = run(cfg);
    for (std::size_t s = 2; s < t.records.size(); ++s)
      CHECK(t.records[s].local_prob + 1e-12 >=
            t.records[s - 1].local_prob);
  }
}

TEST_CASE("run: global probability is the running product") {
  const Trajectory t = run(deuteron_config(1e-2));
  double product = 1.0;
  for (const auto& r : t.records) {
    if (r.step == 0) continue;
    product *= r.local_prob;
    CHECK(r.global_prob == doctest::Approx(product).epsilon(1e-12));
  }
  for (std::size_t s = 1; s < t.records.size(); ++s)
    CHECK(t.records[s].global_prob <= t.records[s - 1].global_prob + 1e-15);
}

TEST_CASE("run: energy error is monotone under a valid rate") {
  const Trajectory t = run(deuteron_config(1e-2));
  const double e0 = t.spectrum.ground_energy();
  for (std::size_t s = 2; s < t.records.size(); ++s)
    CHECK(std::abs(t.records[s].energy - e0) <=
          std::abs(t.records[s - 1].energy - e0) + 1e-9);
}

TEST_CASE("run: noisy mode records both fidelity forms") {
  QgdConfig cfg = deuteron_config(1e-2);
  cfg.noise_beta = 0.04;
  cfg.max_steps = 13;
  cfg.convergence_epsilon = 1e-300;
  const Trajectory t = run(cfg);
  CHECK(std::holds_alternative<DensityMatrix>(t.final_state));
  CHECK(t.final_fidelity ==
        doctest::Approx(std::sqrt(t.final_fidelity_sq)).epsilon(1e-12));
  CHECK(t.final_fidelity_sq < 1.0);
  CHECK(t.final_fidelity_sq > 0.5);
  const DensityMatrix& rho = std::get<DensityMatrix>(t.final_state);
  CHECK(rho.is_valid(1e-9));
}

TEST_CASE("run: noise placements differ and both stay valid") {
  QgdConfig cfg = deuteron_config(1e-2);
  cfg.noise_beta = 0.1;
  cfg.max_steps = 10;
  cfg.convergence_epsilon = 1e-300;
  cfg.noise_placement = NoisePlacement::BeforePostSelection;
  const Trajectory before = run(cfg);
  cfg.noise_placement = NoisePlacement::AfterPostSelection;
  const Trajectory after = run(cfg);
  CHECK(before.final_fidelity > after.final_fidelity);
  CHECK(std::get<DensityMatrix>(before.final_state).is_valid(1e-9));
  CHECK(std::get<DensityMatrix>(after.final_state).is_valid(1e-9));
}

TEST_CASE("readout rule: first step with |dE| <= 2 eps") {
  const Trajectory t = run(deuteron_config(1e-2));
  const int step = noise_readout_step(t, 1e-2);
  CHECK(step == 13);
}

TEST_CASE("sampling bound: exact value at a pure eigenvector") {
  const ModelPreset p = deuteron();
  const double mu = 0.05;
  const GradientLcu g = GradientLcu::build(p.hamiltonian, mu,
                                           p.identity_split);
  const SpectrumReport s = spectrum(p.hamiltonian, mu);
  const double lam0 = s.gradient_magnitudes[0];
  const SamplingBound b = sampling_bound(g, 1.0, lam0);
  CHECK(b.squared ==
        doctest::Approx(g.normalizer() * g.normalizer() / (lam0 * lam0))
            .epsilon(1e-12));
  // with all mass on u0 the squared-numerator bound is the exact 1/P(1)
  const StepResult r =
      qgd_step(s.ground_state(), g, ExactAncilla{g.amplitude_vector()});
  CHECK(1.0 / r.local_prob == doctest::Approx(b.squared).epsilon(1e-9));
}

TEST_CASE("sampling bound: squared form dominates the exact 1/P(1)") {
  const ModelPreset p = deuteron();
  const double mu = 0.05;
  const GradientLcu g = GradientLcu::build(p.hamiltonian, mu,
                                           p.identity_split);
  const SpectrumReport s = spectrum(p.hamiltonian, mu);
  const StateVector phi = p.initial_state();
  const double c0 = fidelity(phi, s.ground_state());
  const SamplingBound b = sampling_bound(g, c0, s.gradient_magnitudes[0]);
  const StepResult r = qgd_step(phi, g, ExactAncilla{g.amplitude_vector()});
  const double exact = 1.0 / r.local_prob;
  CHECK(b.squared >= exact);
  // the bound as printed (numerator N_y, not squared) does not dominate here
  CHECK(b.printed < exact);
  CHECK_THROWS_AS(sampling_bound(g, 0.0, 1.0), InvalidInput);
}

TEST_CASE("config validation") {
  QgdConfig cfg = deuteron_config(1e-2);
  cfg.mu = 0.05;  // both set now
  CHECK_THROWS_AS(run(cfg), InvalidInput);
  QgdConfig cfg2 = deuteron_config(1e-2);
  cfg2.noise_beta = 1.5;
  CHECK_THROWS_AS(run(cfg2), InvalidInput);
  QgdConfig cfg3 = deuteron_config(1e-2);
  cfg3.max_steps = 0;
  CHECK_THROWS_AS(run(cfg3), InvalidInput);
}
