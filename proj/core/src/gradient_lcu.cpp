#include "qgd/gradient_lcu.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qgd/errors.hpp"

namespace qgd {

namespace {

constexpr double kSplitTolerance = 1e-9;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

GradientLcu GradientLcu::build(const PauliHamiltonian& h, double mu,
                               std::span<const double> identity_split) {
  if (h.empty()) throw InvalidInput("cannot build an LCU from an empty Hamiltonian");
  if (!(mu > 0.0)) throw InvalidInput("learning rate mu must be positive");

  const std::size_t n = h.num_qubits();
  const std::string identity_letters(n, 'I');
  const double h_id = h.identity_coefficient();
  const double positive_identity_mass = 1.0 - 2.0 * mu * h_id;

  std::vector<double> split(identity_split.begin(), identity_split.end());
  bool signed_identity_branch = false;
  if (split.empty()) {
    // thirds of the combined positive mass; when 2*mu*h_id eats it up,
    // split the bare +1 instead and give the identity term a signed branch
    if (positive_identity_mass > 0.0) {
      split.assign(3, positive_identity_mass / 3.0);
    } else {
      split.assign(3, 1.0 / 3.0);
      signed_identity_branch = h_id != 0.0;
    }
  } else {
    for (double w : split)
      if (!(w > 0.0)) throw InvalidInput("identity split weights must be positive");
    const double sum = std::accumulate(split.begin(), split.end(), 0.0);
    if (std::abs(sum - 1.0) <= kSplitTolerance * std::max(1.0, sum)) {
      signed_identity_branch = h_id != 0.0;
    } else if (std::abs(sum - positive_identity_mass) <=
               kSplitTolerance * std::max(1.0, std::abs(sum))) {
      // combined mass split directly, nothing else to do
    } else {
      throw InvalidInput("identity split sums to " + std::to_string(sum) +
                         ", expected 1 or 1 - 2*mu*h_id = " +
                         std::to_string(positive_identity_mass));
    }
  }

  GradientLcu g;
  g.mu_ = mu;
  g.work_qubits_ = n;

  std::size_t identity_branches = split.size();
  for (double w : split) g.branches_.push_back({w, +1, identity_letters});
  if (signed_identity_branch)
    g.branches_.push_back(
        {std::abs(2.0 * mu * h_id), h_id > 0.0 ? -1 : +1, identity_letters});

  for (const auto& t : h.terms()) {
    if (t.is_identity()) continue;
    const double y = std::abs(2.0 * mu * t.coefficient);
    if (y == 0.0) continue;  // dropped before padding
    g.branches_.push_back({y, t.coefficient > 0.0 ? -1 : +1, t.letters});
  }

  // Pad to a power of two by halving the largest identity branch in place,
  // keeping the identity prefix ordering intact.
  while (!is_power_of_two(g.branches_.size())) {
    std::size_t largest = 0;
    double largest_w = -1.0;
    for (std::size_t i = 0; i < identity_branches; ++i) {
      if (g.branches_[i].weight > largest_w) {
        largest_w = g.branches_[i].weight;
        largest = i;
      }
    }
    LcuBranch half = g.branches_[largest];
    half.weight /= 2.0;
    g.branches_[largest].weight = half.weight;
    g.branches_.insert(g.branches_.begin() + largest + 1, half);
    ++identity_branches;
  }

  g.ancilla_qubits_ = std::bit_width(g.branches_.size()) - 1;
  g.normalizer_ = 0.0;
  for (const auto& b : g.branches_) g.normalizer_ += b.weight;
  return g;
}

std::vector<double> GradientLcu::amplitude_vector() const {
  std::vector<double> amps(branches_.size());
  for (std::size_t k = 0; k < branches_.size(); ++k)
    amps[k] = std::sqrt(branches_[k].weight / normalizer_);
  return amps;
}

double GradientLcu::squared_weight_sum() const {
  double s = 0.0;
  for (const auto& b : branches_) s += b.weight * b.weight;
  return s;
}

Eigen::MatrixXcd GradientLcu::dense() const {
  const std::int64_t dim = std::int64_t{1} << work_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& b : branches_)
    m += b.weight * static_cast<double>(b.sign) * dense_pauli(b.letters);
  return m;
}

}  // namespace qgd
