#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qgd/analysis.hpp"
#include "qgd/ansatz.hpp"
#include "qgd/density_matrix.hpp"
#include "qgd/gradient_lcu.hpp"
#include "qgd/pauli.hpp"
#include "qgd/statevector.hpp"
#include "qgd/vqsp.hpp"

namespace qgd {

/** How the ancilla register is brought into |y>. */
struct ExactAncilla {
  std::vector<double> amplitudes;
};
struct AncillaCircuit {
  AnsatzSpec spec;
  std::vector<double> theta;
};
using AncillaPreparation = std::variant<ExactAncilla, AncillaCircuit>;

enum class AncillaSource { Vqsp, Exact };

/**
 * Where the depolarizing channel acts in a noisy iteration: on the joint
 * register right before the ancilla is measured (the projection then
 * filters part of the injected mass), or on the post-selected work register.
 */
enum class NoisePlacement { BeforePostSelection, AfterPostSelection };

struct StepResult {
  StateVector state;  // |phi(s+1)>, n-qubit work register
  double local_prob = 0.0;
};
struct DmStepResult {
  DensityMatrix state;
  double local_prob = 0.0;
};

/** One projected iteration |phi> -> G|phi>/||.|| with its success probability. */
StepResult qgd_step(const StateVector& work, const GradientLcu& g,
                    const AncillaPreparation& ancilla);

/** Mixed-state iteration; beta > 0 applies the channel per `placement`. */
DmStepResult qgd_step(const DensityMatrix& work, const GradientLcu& g,
                      const AncillaPreparation& ancilla, double beta,
                      NoisePlacement placement);

struct QgdConfig {
  PauliHamiltonian hamiltonian;
  StateVector initial_state;           // n-qubit work register
  std::optional<double> mu;            // exactly one of mu / epsilon
  std::optional<double> epsilon;       // mu = sqrt(epsilon)/2
  std::vector<double> identity_split;  // empty = default thirds
  int max_steps = 500;
  double convergence_epsilon = 1e-6;   // |E(s) - E(s-1)| stop rule, min 2 steps
  double noise_beta = 0.0;
  NoisePlacement noise_placement = NoisePlacement::BeforePostSelection;
  AncillaSource ancilla_source = AncillaSource::Vqsp;
  std::optional<AnsatzSpec> ansatz;    // default picked from the register size
  std::optional<std::vector<double>> ancilla_theta;  // skip training if given
  VqspOptions vqsp;
  std::uint64_t seed = 0;
};

struct IterationRecord {
  int step = 0;
  double energy = 0.0;
  double fidelity = 0.0;      // sqrt form; ground-space projected mass under
                              // degeneracy, sqrt(Tr(P0 rho)) for mixed states
  double local_prob = 1.0;    // P(s); 1 for the initial record
  double global_prob = 1.0;   // running product of local probabilities
};

struct Trajectory {
  std::vector<IterationRecord> records;  // records[0] is the initial state
  bool converged = false;
  int steps_executed = 0;
  double final_energy = 0.0;
  double final_fidelity = 0.0;
  double final_fidelity_sq = 0.0;  // squared-overlap form, Tr(|u0><u0| rho)
  std::variant<StateVector, DensityMatrix> final_state;
  GradientLcu lcu;
  SpectrumReport spectrum;
  std::optional<VqspResult> vqsp;  // present when the ancilla was trained
};

/** Runs the full iteration; non-convergence is flagged, not thrown. */
Trajectory run(const QgdConfig& config);

/**
 * Read-out step for noise sweeps: the first step s >= 2 of a noiseless
 * trajectory whose energy difference drops to at most twice the target
 * precision.
 */
int noise_readout_step(const Trajectory& noiseless, double epsilon);

/**
 * Measurement-count bound on 1/P(1), in both the N_y-numerator and the
 * N_y^2-numerator variants. Only the squared form dominates the exact value
 * (from closed_form_probability) in general; both are reported.
 */
struct SamplingBound {
  double printed = 0.0;   // N_y   / (lambda0^2 |c0|^2)
  double squared = 0.0;   // N_y^2 / (lambda0^2 |c0|^2)
};
SamplingBound sampling_bound(const GradientLcu& g, double initial_overlap,
                             double lambda0);

}  // namespace qgd
