#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgd/gradient_lcu.hpp"
#include "qgd/pauli.hpp"
#include "qgd/statevector.hpp"

namespace qgd {

/** Ancilla state of the Hadamard-disposal iteration: y_k / sqrt(sum y^2). */
struct FqeAncilla {
  std::vector<double> amplitudes;
  double normalizer = 0.0;  // sum of squared weights

  static FqeAncilla from_lcu(const GradientLcu& g);
};

struct FqeStepResult {
  StateVector state;
  double prob_tilde = 0.0;
};

/**
 * One iteration with the weight-proportional ancilla and a Hadamard
 * transform before the |0...0> measurement. Produces the same direction as
 * qgd_step with success probability ||G phi||^2 / ((K+1) sum y^2).
 */
FqeStepResult fqe_step(const StateVector& work, const GradientLcu& g);

/** True when the probability series is non-decreasing up to `slack`. */
bool fqe_probability_monotone(std::span<const double> probs,
                              double slack = 1e-12);

struct VqeOptions {
  int depth = 1;  // 1 -> 4 parameters, 2 -> 8
  int restarts = 5;
  long max_evaluations = 20000;  // per restart
  std::uint64_t seed = 0;
};

struct VqeResult {
  std::vector<double> gamma_opt;
  double final_energy = 0.0;
  std::vector<double> energy_history;  // best-so-far per evaluation
  bool budget_exhausted = false;
};

/** <00| W(gamma)^dag H W(gamma) |00> for a two-qubit Hamiltonian. */
double vqe_energy(const PauliHamiltonian& h, std::span<const double> gamma,
                  int depth);

/**
 * Nelder-Mead minimisation of the two-qubit hardware-efficient ansatz
 * W = [Ry (x) Ry] CZ [Ry (x) Ry], stacked `depth` times.
 */
VqeResult vqe_run(const PauliHamiltonian& h, const VqeOptions& options);

struct SingleTermStepResult {
  StateVector state;
  double prob = 0.0;
  double ancilla_angle = 0.0;  // 2*arccos(1/sqrt(1 + dt |coeff|))
};

/**
 * The one-ancilla realisation of (I - dt * coeff * P)|phi> for a single
 * Pauli term, with success probability ||.||^2 / (1 + dt |coeff|)^2.
 * Throws PostSelectionFloor when the image is annihilated.
 */
SingleTermStepResult single_term_step(const StateVector& work,
                                      const PauliTerm& term, double delta_t);

}  // namespace qgd
