#include "qgd/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "qgd/errors.hpp"

namespace qgd {

bool PauliTerm::is_identity() const {
  return letters.find_first_not_of('I') == std::string::npos;
}

std::size_t PauliTerm::weight() const {
  return letters.size() - std::count(letters.begin(), letters.end(), 'I');
}

PauliHamiltonian::PauliHamiltonian(std::vector<PauliTerm> terms) {
  if (terms.empty()) return;
  num_qubits_ = terms.front().letters.size();
  std::map<std::string, std::size_t> seen;
  for (auto& t : terms) {
    if (t.letters.size() != num_qubits_)
      throw InvalidInput("inconsistent Pauli string lengths: '" + t.letters +
                         "' vs " + std::to_string(num_qubits_) + " qubits");
    if (t.letters.find_first_not_of("IXYZ") != std::string::npos)
      throw InvalidInput("letter outside {I,X,Y,Z} in '" + t.letters + "'");
    if (!std::isfinite(t.coefficient))
      throw InvalidInput("non-finite coefficient for '" + t.letters + "'");
    auto [it, inserted] = seen.emplace(t.letters, terms_.size());
    if (inserted) {
      terms_.push_back(std::move(t));
    } else {
      terms_[it->second].coefficient += t.coefficient;
    }
  }
  // Exactly cancelled terms vanish; the qubit count is kept so that an
  // all-cancelling input still describes a zero operator of known size.
  std::erase_if(terms_, [](const PauliTerm& t) { return t.coefficient == 0.0; });
}

double PauliHamiltonian::identity_coefficient() const {
  for (const auto& t : terms_)
    if (t.is_identity()) return t.coefficient;
  return 0.0;
}

std::size_t PauliHamiltonian::locality() const {
  std::size_t l = 0;
  for (const auto& t : terms_) l = std::max(l, t.weight());
  return l;
}

double PauliHamiltonian::non_identity_abs_sum() const {
  double s = 0.0;
  for (const auto& t : terms_)
    if (!t.is_identity()) s += std::abs(t.coefficient);
  return s;
}

PauliHamiltonian parse_hamiltonian(std::string_view text) {
  std::vector<PauliTerm> terms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    std::string coeff_text, letters, extra;
    if (!(fields >> coeff_text)) continue;  // blank or comment-only line
    if (!(fields >> letters))
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": expected `<coefficient> <letters>`");
    if (fields >> extra)
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": trailing field '" + extra + "'");
    double coeff = 0.0;
    const char* begin = coeff_text.data();
    const char* end = begin + coeff_text.size();
    auto [parsed, ec] = std::from_chars(begin, end, coeff);
    if (ec != std::errc{} || parsed != end)
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": malformed coefficient '" + coeff_text + "'");
    terms.push_back({coeff, std::move(letters)});
  }
  try {
    return PauliHamiltonian(std::move(terms));
  } catch (const InvalidInput& e) {
    throw InvalidInput("while parsing Hamiltonian: " + std::string(e.what()));
  }
}

namespace {
constexpr std::size_t kDenseQubitLimit = 12;
}

PauliAction compile_pauli(std::string_view letters, std::size_t num_qubits) {
  PauliAction a;
  std::size_t y_count = 0;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const std::uint64_t bit = 1ULL << (num_qubits - 1 - j);
    switch (letters[j]) {
      case 'I':
        break;
      case 'X':
        a.flip_mask |= bit;
        break;
      case 'Y':
        a.flip_mask |= bit;
        a.phase_mask |= bit;
        ++y_count;
        break;
      case 'Z':
        a.phase_mask |= bit;
        break;
      default:
        throw InvalidInput("letter outside {I,X,Y,Z} in '" +
                           std::string(letters) + "'");
    }
  }
  static constexpr std::complex<double> i_pow[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  a.y_factor = i_pow[y_count % 4];
  return a;
}

Eigen::MatrixXcd dense_pauli(std::string_view letters) {
  const std::size_t n = letters.size();
  if (n > kDenseQubitLimit)
    throw InvalidInput("dense Pauli limited to " +
                       std::to_string(kDenseQubitLimit) + " qubits");
  const std::int64_t dim = std::int64_t{1} << n;
  const PauliAction a = compile_pauli(letters, n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t w = 0; w < dim; ++w)
    m(static_cast<std::int64_t>(w ^ a.flip_mask), w) = a.phase(w);
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
  if (h.num_qubits() > kDenseQubitLimit)
    throw InvalidInput("dense matrix limited to " +
                       std::to_string(kDenseQubitLimit) + " qubits");
  const std::int64_t dim = std::int64_t{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms())
    m += t.coefficient * dense_pauli(t.letters);
  return m;
}

}  // namespace qgd
