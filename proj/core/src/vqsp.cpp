#include "qgd/vqsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qgd/errors.hpp"
#include "qgd/nelder_mead.hpp"

namespace qgd {

namespace {
constexpr double kProbabilityFloor = 1e-12;
}

double overlap_plus(const StateVector& psi) {
  std::complex<double> sum = 0.0;
  for (const auto& a : psi.amplitudes()) sum += a;
  return (sum / std::sqrt(static_cast<double>(psi.dim()))).real();
}

static void check_target(std::span<const double> target) {
  double norm2 = 0.0;
  for (double t : target) {
    if (t < 0.0) throw InvalidInput("target amplitudes must be non-negative");
    norm2 += t * t;
  }
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw InvalidInput("target amplitudes must have unit 2-norm");
}

double cost_f(const AnsatzSpec& spec, std::span<const double> theta,
              std::span<const double> target, long shots, std::uint64_t seed,
              PhaseTerm phase_term) {
  check_target(target);
  const StateVector psi = build_ansatz_state(spec, theta);
  if (psi.dim() != target.size())
    throw InvalidInput("target length does not match the circuit register");
  const std::vector<double> p = sample_distribution(psi, shots, seed);

  double kl = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    const double t2 = target[k] * target[k];
    if (t2 == 0.0) continue;
    kl += -t2 * std::log(std::max(p[k], kProbabilityFloor) / t2);
  }

  double amp_sum = 0.0;
  for (double t : target) amp_sum += t;
  const double root_buckets = std::sqrt(static_cast<double>(target.size()));
  const double diff = amp_sum - root_buckets * overlap_plus(psi);
  return kl + (phase_term == PhaseTerm::Absolute ? std::abs(diff) : diff * diff);
}

VqspResult train(const AnsatzSpec& spec, std::span<const double> target,
                 const VqspOptions& options) {
  check_target(target);
  if (!(options.epsilon_prime > 0.0))
    throw InvalidInput("epsilon' must be positive");
  const std::size_t nparam = spec.parameter_count();

  const StateVector target_state = StateVector::from_amplitudes(
      {target.begin(), target.end()});

  auto cost_of = [&](PhaseTerm term) {
    return [&, term](std::span<const double> theta) {
      return cost_f(spec, theta, target, options.shots, options.seed, term);
    };
  };
  const auto search_cost = cost_of(PhaseTerm::Squared);
  const auto final_cost = cost_of(options.phase_term);
  // On the squared form the phase residual enters quadratically, so the
  // search must go to epsilon'^2 for the absolute form to end at epsilon'.
  const double search_target =
      options.phase_term == PhaseTerm::Absolute
          ? options.epsilon_prime * options.epsilon_prime
          : options.epsilon_prime;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  VqspResult best;
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    std::vector<double> theta0(nparam);
    for (auto& t : theta0) t = angle(rng);

    std::vector<double> history;
    double best_seen = std::numeric_limits<double>::infinity();
    auto observer = [&](double v) {
      best_seen = std::min(best_seen, v);
      history.push_back(best_seen);
    };

    long remaining = options.max_evaluations;
    NelderMeadOptions nm;
    nm.target_value = search_target;

    // Pass 1: wide simplex on the smooth squared form to find a basin.
    nm.initial_offset = 1.0;
    nm.max_evaluations = std::min<long>(remaining, options.max_evaluations / 4);
    auto stage = nelder_mead(search_cost, theta0, nm, observer);
    remaining -= stage.evaluations;
    std::vector<double> theta = std::move(stage.best_point);
    double value = stage.best_value;

    // Re-initialised passes at the incumbent; offset halves when stalling.
    double offset = 0.3;
    while (remaining > static_cast<long>(nparam) + 2 &&
           value > search_target) {
      nm.initial_offset = offset;
      nm.max_evaluations = std::min<long>(remaining, options.max_evaluations / 5);
      stage = nelder_mead(search_cost, theta, nm, observer);
      remaining -= stage.evaluations;
      if (stage.best_value < value * 0.9) {
        value = stage.best_value;
        theta = std::move(stage.best_point);
      } else {
        if (stage.best_value < value) {
          value = stage.best_value;
          theta = std::move(stage.best_point);
        }
        offset = std::max(offset * 0.5, 0.02);
      }
    }

    // Final refinement on the configured phase form.
    nm.target_value = options.epsilon_prime;
    nm.initial_offset = 0.1;
    nm.max_evaluations = std::max<long>(remaining, static_cast<long>(nparam) + 2);
    stage = nelder_mead(final_cost, theta, nm, observer);
    remaining -= stage.evaluations;
    theta = std::move(stage.best_point);

    VqspResult run;
    run.theta_opt = std::move(theta);
    run.final_cost = stage.best_value;
    run.cost_history = std::move(history);
    run.prepared_fidelity =
        fidelity(build_ansatz_state(spec, run.theta_opt), target_state);
    run.reached_tolerance = run.final_cost <= options.epsilon_prime;
    run.evaluations = options.max_evaluations - remaining;
    run.restarts_used = r + 1;

    if (r == 0 || run.final_cost < best.final_cost) best = std::move(run);
    if (best.reached_tolerance) break;
  }
  return best;
}

}  // namespace qgd
