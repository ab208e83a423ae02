#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgd/ansatz.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/** Form of the phase-fixing term added to the KL divergence. */
enum class PhaseTerm { Absolute, Squared };

struct VqspOptions {
  double epsilon_prime = 1e-9;   // termination F(theta) <= epsilon'
  int restarts = 10;
  long max_evaluations = 50000;  // per restart
  PhaseTerm phase_term = PhaseTerm::Absolute;
  long shots = 0;                // 0 = exact probabilities
  std::uint64_t seed = 0;
};

struct VqspResult {
  std::vector<double> theta_opt;
  double final_cost = 0.0;
  std::vector<double> cost_history;  // best-so-far per evaluation, winner run
  double prepared_fidelity = 0.0;    // |<target|psi(theta_opt)>|
  bool reached_tolerance = false;
  long evaluations = 0;
  int restarts_used = 0;
};

/** Re <+...+|psi>, the Hadamard-test overlap evaluated exactly. */
double overlap_plus(const StateVector& psi);

/**
 * The preparation cost F = F_KL + phase term. F_KL treats buckets with zero
 * target mass as contributing nothing and floors measured probabilities at
 * 1e-12 where the target mass is positive.
 */
double cost_f(const AnsatzSpec& spec, std::span<const double> theta,
              std::span<const double> target_amplitudes, long shots,
              std::uint64_t seed, PhaseTerm phase_term = PhaseTerm::Absolute);

/**
 * Trains the circuit so U(theta)|0..0> matches the positive target
 * amplitude vector. Per restart: a wide-simplex Nelder-Mead pass on the
 * squared phase form locates a basin, re-initialised passes tighten it,
 * and a final pass on the configured form refines. Restarts draw theta_0
 * uniformly from [0, 2pi); failure to reach epsilon' is flagged, not fatal.
 */
VqspResult train(const AnsatzSpec& spec,
                 std::span<const double> target_amplitudes,
                 const VqspOptions& options);

}  // namespace qgd
