#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qgd/gradient_lcu.hpp"
#include "qgd/pauli.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/**
 * Full dense eigendecomposition of a Hamiltonian (n <= 12), the single
 * source of truth for reference energies and eigenvectors. When `mu` is
 * set, the gradient-operator magnitudes |1 - 2*mu*E_i| are carried too.
 */
struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXcd eigenvectors;    // columns match eigenvalues
  std::optional<double> mu;
  std::vector<double> gradient_magnitudes;  // |1 - 2*mu*E_i| when mu is set
  std::size_t dominant_index = 0;           // argmax |lambda_i| when mu is set

  double ground_energy() const { return eigenvalues.front(); }
  double top_energy() const { return eigenvalues.back(); }
  StateVector ground_state() const;
  bool degenerate_ground(double tol = 1e-10) const;
};

SpectrumReport spectrum(const PauliHamiltonian& h,
                        std::optional<double> mu = std::nullopt);

/** Case labels of the learning-rate bound analysis. */
enum class RateCase {
  AllNonNegative,   // 0 <= E_0: bounded
  AllNonPositive,   // E_{N-1} <= 0: any positive rate
  MixedUnbounded,   // mixed signs, E_{N-1} + E_0 <= 0
  MixedBounded,     // mixed signs, E_{N-1} + E_0 > 0
};

/** Open interval (0, upper) of convergent learning rates. */
struct RateInterval {
  double upper = 0.0;  // meaningful only when !unbounded
  bool unbounded = false;
  RateCase case_tag = RateCase::MixedBounded;
  bool degenerate_ground = false;  // flagged, interval still computed

  bool contains(double mu) const {
    return mu > 0.0 && (unbounded || mu < upper);
  }
};

RateInterval learning_rate_interval(const SpectrumReport& s);

/** Interval of the shifted Hamiltonian H + tau*I. */
RateInterval shift_analysis(const SpectrumReport& s, double tau);

/** mu = sqrt(eps)/2, with the matching first-order time step 2*mu. */
struct RateFromPrecision {
  double mu = 0.0;
  double delta_t = 0.0;
};
RateFromPrecision rate_from_precision(double epsilon);

/**
 * Closed-form success probabilities: P(s+1) = sum |lambda_i|^2 |c_i|^2 / N_y^2
 * with the coefficient recursion c_i <- lambda_i c_i / ||.||, iterated
 * `steps` times from the given overlaps.
 */
std::vector<double> closed_form_probability(std::span<const double> lambdas,
                                            std::span<const double> overlaps_sq,
                                            double normalizer,
                                            std::size_t steps);

/** Exact P, the FQE counterpart, and the (non-negative) margin P - P~. */
struct ProbabilityComparison {
  double p = 0.0;
  double p_tilde = 0.0;
  double margin = 0.0;
};
ProbabilityComparison fqe_probability_comparison(const GradientLcu& g,
                                                 const StateVector& work);

/** sum_k y_k s_k P_k |phi>, split into 2-norm and unit direction. */
struct GradientImage {
  double norm = 0.0;
  StateVector direction;
};
GradientImage apply_gradient_operator(const GradientLcu& g,
                                      const StateVector& work);

/**
 * Asymptotic controlled-gate count of the block unitary,
 * T_total = l * (K+1) * c * k^2 with the constant convention c = 1, plus
 * the circuit-depth comparison against the Hadamard-disposal scheme
 * (D1 = state-preparation depth, D2 = block-unitary depth).
 */
struct GateCostEstimate {
  long long t_total = 0;
  bool degenerate = false;  // k = 0, nothing to control
};
GateCostEstimate gate_cost_estimate(std::size_t locality,
                                    std::size_t branch_count_minus_one,
                                    std::size_t ancilla_qubits);

struct DepthComparison {
  long long hadamard_disposal = 0;  // D1 + D2
  long long inverse_disposal = 0;   // 2*D1 + D2
};
DepthComparison lcu_depth_comparison(long long d1, long long d2);

/** |k><k| (x) P + sum_{k' != k} |k'><k'| (x) I over `ancilla` + work qubits. */
Eigen::MatrixXcd controlled_unitary_dense(std::size_t ancilla_qubits,
                                          std::size_t pattern,
                                          const Eigen::MatrixXcd& p_work);

/**
 * Same operator built the indirect way: conjugate the all-ones-controlled
 * gate by X on every ancilla qubit whose pattern bit is zero.
 */
Eigen::MatrixXcd sigma_x_conjugated_controlled(std::size_t ancilla_qubits,
                                               std::size_t pattern,
                                               const Eigen::MatrixXcd& p_work);

}  // namespace qgd
