#include <benchmark/benchmark.h>

#include <random>

#include "qgd/density_matrix.hpp"
#include "qgd/gates.hpp"
#include "qgd/gradient_lcu.hpp"
#include "qgd/models.hpp"
#include "qgd/statevector.hpp"

namespace {

qgd::StateVector random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::complex<double>> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) a = std::complex<double>(g(rng), g(rng));
  return qgd::StateVector::from_amplitudes(std::move(amps));
}

void BM_SingleQubitGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qgd::StateVector s = random_state(n, 1);
  const qgd::GateOp op = qgd::ry(n / 2, 0.37);
  for (auto _ : state) {
    s.apply(op);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SingleQubitGate)->Arg(6)->Arg(10)->Arg(14);

void BM_ControlledGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qgd::StateVector s = random_state(n, 2);
  qgd::GateOp op = qgd::ry(0, 0.37);
  for (int q = 1; q < 4; ++q) op.controls.emplace_back(q, true);
  for (auto _ : state) {
    s.apply(op);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ControlledGate)->Arg(6)->Arg(10)->Arg(14);

void BM_BlockUnitaryHeisenberg8(benchmark::State& state) {
  const auto preset = qgd::heisenberg8();
  const auto lcu =
      qgd::GradientLcu::build(preset.hamiltonian, 0.05, preset.identity_split);
  qgd::StateVector joint = random_state(
      static_cast<int>(lcu.ancilla_qubits() + lcu.work_qubits()), 3);
  for (auto _ : state) {
    qgd::apply_block_unitary(joint, lcu);
    benchmark::DoNotOptimize(joint.amplitudes().data());
  }
}
BENCHMARK(BM_BlockUnitaryHeisenberg8);

void BM_DensityMatrixIteration(benchmark::State& state) {
  const auto preset = qgd::deuteron();
  const auto lcu =
      qgd::GradientLcu::build(preset.hamiltonian, 0.05, preset.identity_split);
  const qgd::DensityMatrix rho =
      qgd::DensityMatrix::from_pure(preset.initial_state());
  const auto anc = lcu.amplitude_vector();
  for (auto _ : state) {
    qgd::DensityMatrix joint = qgd::DensityMatrix::embed_with_ancilla(anc, rho);
    joint.apply_block_unitary(lcu);
    auto projected = qgd::project_ancilla_onto(joint, anc);
    benchmark::DoNotOptimize(projected.probability);
  }
}
BENCHMARK(BM_DensityMatrixIteration);

}  // namespace
