#include <benchmark/benchmark.h>

#include "qgd/gradient_lcu.hpp"
#include "qgd/models.hpp"
#include "qgd/qgd.hpp"
#include "qgd/vqsp.hpp"

namespace {

void BM_DeuteronTrajectory(benchmark::State& state) {
  const auto preset = qgd::deuteron();
  qgd::QgdConfig cfg;
  cfg.hamiltonian = preset.hamiltonian;
  cfg.initial_state = preset.initial_state();
  cfg.epsilon = 1e-2;
  cfg.identity_split = preset.identity_split;
  cfg.ancilla_source = qgd::AncillaSource::Exact;
  cfg.seed = 7;
  for (auto _ : state) {
    const qgd::Trajectory t = qgd::run(cfg);
    benchmark::DoNotOptimize(t.final_energy);
  }
}
BENCHMARK(BM_DeuteronTrajectory);

void BM_Heisenberg8Step(benchmark::State& state) {
  const auto preset = qgd::heisenberg8();
  const auto lcu =
      qgd::GradientLcu::build(preset.hamiltonian, 0.05, preset.identity_split);
  qgd::StateVector phi = preset.initial_state();
  const qgd::ExactAncilla anc{lcu.amplitude_vector()};
  for (auto _ : state) {
    auto r = qgd::qgd_step(phi, lcu, anc);
    phi = std::move(r.state);
    benchmark::DoNotOptimize(r.local_prob);
  }
}
BENCHMARK(BM_Heisenberg8Step);

void BM_VqspCostEvaluation(benchmark::State& state) {
  const auto preset = qgd::heisenberg8();
  const auto lcu =
      qgd::GradientLcu::build(preset.hamiltonian, 0.05, preset.identity_split);
  const auto target = lcu.amplitude_vector();
  const std::vector<double> theta(preset.ansatz.parameter_count(), 0.21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qgd::cost_f(preset.ansatz, theta, target, 0, 0));
  }
}
BENCHMARK(BM_VqspCostEvaluation);

}  // namespace
