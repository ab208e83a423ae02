#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qgd/pauli.hpp"

namespace qgd {

/** One unitary branch of the decomposition: weight * sign * PauliString. */
struct LcuBranch {
  double weight = 0.0;  // y_k > 0
  int sign = +1;        // s_k, realised as Rx(2pi) in the circuit lowering
  std::string letters;
};

/**
 * The gradient operator G = I - 2*mu*H written as a positively weighted
 * combination of signed Pauli unitaries, sum_k y_k s_k P_k, padded so the
 * branch count is exactly 2^ancilla_qubits.
 *
 * The identity coefficient of G is handled one of two ways, selected by the
 * sum of the supplied split weights:
 *   - split sums to 1: the +1 from I is partitioned over the split entries
 *     and any identity term of H contributes its own signed branch of
 *     weight |2*mu*h_id| (the decomposition used for the deuteron);
 *   - split sums to 1 - 2*mu*h_id (> 0 required): the combined identity
 *     mass is partitioned directly, no signed identity branch.
 * With no split given, the positive identity mass is divided into equal
 * thirds.
 */
class GradientLcu {
 public:
  static GradientLcu build(const PauliHamiltonian& h, double mu,
                           std::span<const double> identity_split = {});

  double mu() const { return mu_; }
  double normalizer() const { return normalizer_; }  // N_y = sum y_k
  std::size_t ancilla_qubits() const { return ancilla_qubits_; }
  std::size_t work_qubits() const { return work_qubits_; }
  std::size_t branch_count() const { return branches_.size(); }
  const std::vector<LcuBranch>& branches() const { return branches_; }

  /** Ancilla amplitudes sqrt(y_k / N_y); unit 2-norm. */
  std::vector<double> amplitude_vector() const;

  /** Sum over squared weights, the FQE normalisation constant. */
  double squared_weight_sum() const;

  /** Dense reconstruction sum_k y_k s_k P_k; equals I - 2*mu*H. n <= 12. */
  Eigen::MatrixXcd dense() const;

 private:
  double mu_ = 0.0;
  double normalizer_ = 0.0;
  std::size_t ancilla_qubits_ = 0;
  std::size_t work_qubits_ = 0;
  std::vector<LcuBranch> branches_;
};

}  // namespace qgd
