#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qgd {

/**
 * One real-weighted Pauli string. `letters` is a word over {I, X, Y, Z};
 * letters[0] acts on the most significant work qubit (site 1 in the usual
 * chain labelling), letters[n-1] on the least significant.
 */
struct PauliTerm {
  double coefficient = 0.0;
  std::string letters;

  bool is_identity() const;
  /** Number of non-identity letters. */
  std::size_t weight() const;
};

/**
 * A Hermitian operator given as an ordered real combination of Pauli
 * strings. Terms with identical letters are merged on construction and
 * terms whose merged coefficient is exactly zero are dropped.
 */
class PauliHamiltonian {
 public:
  PauliHamiltonian() = default;
  explicit PauliHamiltonian(std::vector<PauliTerm> terms);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /** Coefficient of the all-identity string, 0 if absent. */
  double identity_coefficient() const;
  /** Largest non-identity weight over all terms (the locality l). */
  std::size_t locality() const;
  /** Sum of |coefficient| over non-identity terms. */
  double non_identity_abs_sum() const;

 private:
  std::vector<PauliTerm> terms_;
  std::size_t num_qubits_ = 0;
};

/**
 * Parses the Hamiltonian text format: one `<coefficient> <letters>` pair
 * per line, `#` starts a comment, blank lines ignored. All letter strings
 * must have equal length. Throws InvalidInput with a line diagnostic.
 */
PauliHamiltonian parse_hamiltonian(std::string_view text);

/** Dense 2^n x 2^n matrix of the Hamiltonian. Guarded to n <= 12. */
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

/** Dense matrix of a single Pauli string (unit coefficient). */
Eigen::MatrixXcd dense_pauli(std::string_view letters);

/**
 * Bit-level action of a Pauli string P on computational basis states:
 * P|w> = phase(w) |w ^ flip_mask>. The phase factors through
 * i^{#Y} * (-1)^{popcount(w & phase_mask)}.
 */
struct PauliAction {
  std::uint64_t flip_mask = 0;
  std::uint64_t phase_mask = 0;  // bits of Y and Z letters
  std::complex<double> y_factor = 1.0;  // i^{#Y}

  std::complex<double> phase(std::uint64_t basis) const {
    return (std::popcount(basis & phase_mask) & 1) ? -y_factor : y_factor;
  }
};

/** Compiles letters (msb-first) into masks over `num_qubits` low bits. */
PauliAction compile_pauli(std::string_view letters, std::size_t num_qubits);

}  // namespace qgd
