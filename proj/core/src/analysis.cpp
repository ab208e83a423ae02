#include "qgd/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qgd/errors.hpp"

namespace qgd {

StateVector SpectrumReport::ground_state() const {
  std::vector<std::complex<double>> amps(eigenvectors.rows());
  for (Eigen::Index i = 0; i < eigenvectors.rows(); ++i)
    amps[i] = eigenvectors(i, 0);
  return StateVector::from_amplitudes(std::move(amps));
}

bool SpectrumReport::degenerate_ground(double tol) const {
  return eigenvalues.size() > 1 && eigenvalues[1] - eigenvalues[0] <= tol;
}

SpectrumReport spectrum(const PauliHamiltonian& h, std::optional<double> mu) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw Error("eigendecomposition failed to converge");
  SpectrumReport r;
  r.eigenvalues.assign(es.eigenvalues().data(),
                       es.eigenvalues().data() + es.eigenvalues().size());
  r.eigenvectors = es.eigenvectors();
  if (mu) {
    r.mu = mu;
    r.gradient_magnitudes.reserve(r.eigenvalues.size());
    for (double e : r.eigenvalues)
      r.gradient_magnitudes.push_back(std::abs(1.0 - 2.0 * *mu * e));
    r.dominant_index = 0;
    for (std::size_t i = 1; i < r.gradient_magnitudes.size(); ++i)
      if (r.gradient_magnitudes[i] > r.gradient_magnitudes[r.dominant_index])
        r.dominant_index = i;
  }
  return r;
}

namespace {

RateInterval interval_for(std::span<const double> eigenvalues,
                          bool degenerate) {
  const double lo = eigenvalues.front();
  const double hi = eigenvalues.back();
  // a sum indistinguishable from zero belongs to the unbounded branch
  const double zero_tol =
      1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  RateInterval r;
  r.degenerate_ground = degenerate;
  if (lo >= 0.0) {
    r.case_tag = RateCase::AllNonNegative;
    r.unbounded = false;
    r.upper = 1.0 / (hi + lo);
  } else if (hi <= 0.0) {
    r.case_tag = RateCase::AllNonPositive;
    r.unbounded = true;
  } else if (hi + lo <= zero_tol) {
    r.case_tag = RateCase::MixedUnbounded;
    r.unbounded = true;
  } else {
    r.case_tag = RateCase::MixedBounded;
    r.unbounded = false;
    r.upper = 1.0 / (hi + lo);
  }
  return r;
}

}  // namespace

RateInterval learning_rate_interval(const SpectrumReport& s) {
  return interval_for(s.eigenvalues, s.degenerate_ground());
}

RateInterval shift_analysis(const SpectrumReport& s, double tau) {
  std::vector<double> shifted(s.eigenvalues);
  for (double& e : shifted) e += tau;
  return interval_for(shifted, s.degenerate_ground());
}

RateFromPrecision rate_from_precision(double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInput("precision must be positive");
  const double mu = std::sqrt(epsilon) / 2.0;
  return {mu, 2.0 * mu};
}

std::vector<double> closed_form_probability(std::span<const double> lambdas,
                                            std::span<const double> overlaps_sq,
                                            double normalizer,
                                            std::size_t steps) {
  if (lambdas.size() != overlaps_sq.size())
    throw InvalidInput("lambda and overlap lists differ in length");
  double total = 0.0;
  for (double c : overlaps_sq) total += c;
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidInput("squared overlaps must sum to one");

  std::vector<double> mass(overlaps_sq.begin(), overlaps_sq.end());
  std::vector<double> probs;
  probs.reserve(steps);
  const double n2 = normalizer * normalizer;
  for (std::size_t s = 0; s < steps; ++s) {
    double weighted = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i)
      weighted += lambdas[i] * lambdas[i] * mass[i];
    probs.push_back(weighted / n2);
    for (std::size_t i = 0; i < mass.size(); ++i)
      mass[i] = lambdas[i] * lambdas[i] * mass[i] / weighted;
  }
  return probs;
}

GradientImage apply_gradient_operator(const GradientLcu& g,
                                      const StateVector& work) {
  if (work.num_qubits() != g.work_qubits())
    throw InvalidInput("state and LCU register sizes differ");
  std::vector<std::complex<double>> out(work.dim(), 0.0);
  for (const auto& b : g.branches()) {
    const PauliAction a = compile_pauli(b.letters, g.work_qubits());
    const double w = b.weight * b.sign;
    for (std::uint64_t i = 0; i < work.dim(); ++i)
      out[i ^ a.flip_mask] += w * a.phase(i) * work.amplitude(i);
  }
  double norm2 = 0.0;
  for (const auto& c : out) norm2 += std::norm(c);
  return {std::sqrt(norm2), StateVector::from_amplitudes(std::move(out))};
}

ProbabilityComparison fqe_probability_comparison(const GradientLcu& g,
                                                 const StateVector& work) {
  const GradientImage image = apply_gradient_operator(g, work);
  const double image_norm2 = image.norm * image.norm;
  ProbabilityComparison r;
  const double k_plus_1 = static_cast<double>(g.branch_count());
  r.p = image_norm2 / (g.normalizer() * g.normalizer());
  r.p_tilde = image_norm2 / (k_plus_1 * g.squared_weight_sum());
  r.margin = r.p - r.p_tilde;
  return r;
}

GateCostEstimate gate_cost_estimate(std::size_t locality,
                                    std::size_t branch_count_minus_one,
                                    std::size_t ancilla_qubits) {
  GateCostEstimate e;
  e.degenerate = ancilla_qubits == 0;
  e.t_total = static_cast<long long>(locality) *
              static_cast<long long>(branch_count_minus_one + 1) *
              static_cast<long long>(ancilla_qubits) *
              static_cast<long long>(ancilla_qubits);
  return e;
}

DepthComparison lcu_depth_comparison(long long d1, long long d2) {
  return {d1 + d2, 2 * d1 + d2};
}

Eigen::MatrixXcd controlled_unitary_dense(std::size_t ancilla_qubits,
                                          std::size_t pattern,
                                          const Eigen::MatrixXcd& p_work) {
  const std::size_t blocks = std::size_t{1} << ancilla_qubits;
  if (pattern >= blocks) throw InvalidInput("control pattern out of range");
  const Eigen::Index wd = p_work.rows();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(blocks * wd, blocks * wd);
  m.block(pattern * wd, pattern * wd, wd, wd) = p_work;
  return m;
}

Eigen::MatrixXcd sigma_x_conjugated_controlled(std::size_t ancilla_qubits,
                                               std::size_t pattern,
                                               const Eigen::MatrixXcd& p_work) {
  const std::size_t blocks = std::size_t{1} << ancilla_qubits;
  if (pattern >= blocks) throw InvalidInput("control pattern out of range");
  const std::size_t all_ones = blocks - 1;
  const Eigen::Index wd = p_work.rows();
  Eigen::MatrixXcd m =
      controlled_unitary_dense(ancilla_qubits, all_ones, p_work);
  // [sigma_x] permutes ancilla blocks by XOR with the negated pattern bits.
  const std::size_t xor_mask = all_ones ^ pattern;
  Eigen::MatrixXcd frame =
      Eigen::MatrixXcd::Zero(blocks * wd, blocks * wd);
  for (std::size_t a = 0; a < blocks; ++a)
    frame.block((a ^ xor_mask) * wd, a * wd, wd, wd) =
        Eigen::MatrixXcd::Identity(wd, wd);
  return frame * m * frame.adjoint();
}

}  // namespace qgd
