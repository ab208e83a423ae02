#include "qgd/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "qgd/errors.hpp"

namespace qgd {

namespace {
constexpr double kPostSelectionFloorValue = 1e-14;
}

StateVector StateVector::zero_state(std::size_t num_qubits) {
  StateVector s;
  s.num_qubits_ = num_qubits;
  s.amps_.assign(std::size_t{1} << num_qubits, 0.0);
  s.amps_[0] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(
    std::vector<std::complex<double>> amps) {
  if (!std::has_single_bit(amps.size()))
    throw InvalidInput("amplitude count must be a power of two");
  StateVector s;
  s.num_qubits_ = std::bit_width(amps.size()) - 1;
  s.amps_ = std::move(amps);
  s.normalize();
  return s;
}

StateVector StateVector::product_with_ancilla(std::span<const double> ancilla,
                                              const StateVector& work) {
  if (!std::has_single_bit(ancilla.size()))
    throw InvalidInput("ancilla amplitude count must be a power of two");
  StateVector s;
  const std::size_t k = std::bit_width(ancilla.size()) - 1;
  s.num_qubits_ = work.num_qubits() + k;
  s.amps_.resize(ancilla.size() * work.dim());
  for (std::size_t a = 0; a < ancilla.size(); ++a)
    for (std::size_t w = 0; w < work.dim(); ++w)
      s.amps_[(a << work.num_qubits()) | w] = ancilla[a] * work.amps_[w];
  return s;
}

void StateVector::apply(const GateOp& op) {
  detail::apply_gate_span(amps_, num_qubits_, op);
}

void StateVector::apply(std::span<const GateOp> circuit) {
  for (const auto& op : circuit) apply(op);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n < kPostSelectionFloorValue)
    throw PostSelectionFloor("state norm vanished");
  for (auto& a : amps_) a /= n;
}

std::complex<double> StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw InvalidInput("dimension mismatch");
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

void apply_gate(StateVector& state, const GateOp& op) { state.apply(op); }

void apply_block_unitary(StateVector& state, const GradientLcu& g) {
  detail::apply_block_unitary_span(state.amplitudes(), g);
}

ProjectionResult project_ancilla_zero(const StateVector& state,
                                      std::size_t k) {
  if (k > state.num_qubits()) throw InvalidInput("ancilla larger than register");
  const std::size_t work_dim = std::size_t{1} << (state.num_qubits() - k);
  double mass = 0.0;
  for (std::size_t w = 0; w < work_dim; ++w)
    mass += std::norm(state.amplitude(w));
  if (mass < kPostSelectionFloorValue)
    throw PostSelectionFloor("post-selection probability below 1e-14");
  ProjectionResult r;
  r.probability = mass;
  std::vector<std::complex<double>> amps(state.dim(), 0.0);
  const double scale = 1.0 / std::sqrt(mass);
  for (std::size_t w = 0; w < work_dim; ++w)
    amps[w] = state.amplitude(w) * scale;
  r.collapsed = StateVector::from_amplitudes(std::move(amps));
  return r;
}

AncillaDisposal project_ancilla_onto(const StateVector& state,
                                     std::span<const double> bra) {
  if (!std::has_single_bit(bra.size()))
    throw InvalidInput("bra amplitude count must be a power of two");
  const std::size_t k = std::bit_width(bra.size()) - 1;
  if (k > state.num_qubits()) throw InvalidInput("ancilla larger than register");
  const std::size_t n = state.num_qubits() - k;
  const std::size_t work_dim = std::size_t{1} << n;
  std::vector<std::complex<double>> work(work_dim, 0.0);
  for (std::size_t a = 0; a < bra.size(); ++a) {
    if (bra[a] == 0.0) continue;
    for (std::size_t w = 0; w < work_dim; ++w)
      work[w] += bra[a] * state.amplitude((a << n) | w);
  }
  double mass = 0.0;
  for (const auto& c : work) mass += std::norm(c);
  if (mass < kPostSelectionFloorValue)
    throw PostSelectionFloor("post-selection probability below 1e-14");
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& c : work) c *= scale;
  return {mass, StateVector::from_amplitudes(std::move(work))};
}

StateVector extract_work_register(const StateVector& state, std::size_t k) {
  const std::size_t n = state.num_qubits() - k;
  const std::size_t work_dim = std::size_t{1} << n;
  std::vector<std::complex<double>> work(
      state.amplitudes().begin(), state.amplitudes().begin() + work_dim);
  return StateVector::from_amplitudes(std::move(work));
}

double expectation(const StateVector& state, const PauliHamiltonian& h) {
  if (h.num_qubits() != state.num_qubits())
    throw InvalidInput("Hamiltonian and state dimensions do not match");
  std::complex<double> acc = 0.0;
  const auto amps = state.amplitudes();
  for (const auto& t : h.terms()) {
    const PauliAction a = compile_pauli(t.letters, h.num_qubits());
    std::complex<double> term = 0.0;
    for (std::uint64_t w = 0; w < amps.size(); ++w)
      term += std::conj(amps[w ^ a.flip_mask]) * a.phase(w) * amps[w];
    acc += t.coefficient * term;
  }
  if (std::abs(acc.imag()) > 1e-8)
    throw Error("expectation has imaginary residue " +
                std::to_string(acc.imag()));
  return acc.real();
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::abs(a.inner(b));
}

std::vector<double> sample_distribution(const StateVector& state, long shots,
                                        std::uint64_t seed) {
  std::vector<double> p(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i)
    p[i] = std::norm(state.amplitude(i));
  if (shots == 0) return p;
  if (shots < 0) throw InvalidInput("negative shot count");

  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> counts(p.size(), 0.0);
  for (long s = 0; s < shots; ++s) {
    const double u = unit(rng) * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    counts[std::min<std::size_t>(it - cdf.begin(), p.size() - 1)] += 1.0;
  }
  for (auto& c : counts) c /= static_cast<double>(shots);
  return counts;
}

}  // namespace qgd
