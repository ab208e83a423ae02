#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qgd/analysis.hpp"
#include "qgd/errors.hpp"
#include "qgd/models.hpp"
#include "qgd/qgd.hpp"

using namespace qgd;

TEST_CASE("spectrum: single Z") {
  const SpectrumReport s = spectrum(parse_hamiltonian("1.0 Z"));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("spectrum: deuteron gradient magnitudes at mu = sqrt(0.1)/2") {
  const double mu = std::sqrt(0.1) / 2.0;
  const SpectrumReport s = spectrum(deuteron().hamiltonian, mu);
  REQUIRE(s.gradient_magnitudes.size() == 4);
  CHECK(std::abs(s.gradient_magnitudes[0] - 1.5529) < 1e-4);
  CHECK(std::abs(s.gradient_magnitudes[1] - 0.9999) < 1e-4);
  CHECK(std::abs(s.gradient_magnitudes[2] - 2.7358) < 1e-4);
  CHECK(std::abs(s.gradient_magnitudes[3] - 3.2889) < 1e-4);
  CHECK(s.dominant_index == 3);
}

TEST_CASE("spectrum: heisenberg n=2 extremes") {
  const SpectrumReport s = spectrum(heisenberg2().hamiltonian);
  CHECK(s.ground_energy() == doctest::Approx(-1.2).epsilon(1e-12));
  CHECK(s.top_energy() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("learning-rate interval: the four case labels") {
  SUBCASE("heisenberg n=2 upper bound 0.5556") {
    const RateInterval iv =
        learning_rate_interval(spectrum(heisenberg2().hamiltonian));
    CHECK_FALSE(iv.unbounded);
    CHECK(std::abs(iv.upper - 0.5556) < 1e-4);
    CHECK(iv.case_tag == RateCase::MixedBounded);
    CHECK(iv.contains(0.05));
    CHECK_FALSE(iv.contains(0.6124));
  }
  SUBCASE("all non-positive spectrum is unbounded") {
    const SpectrumReport s = spectrum(parse_hamiltonian("-1.5 I\n0.5 Z"));
    // eigenvalues -2 and -1
    REQUIRE(s.eigenvalues[0] == doctest::Approx(-2.0));
    const RateInterval iv = learning_rate_interval(s);
    CHECK(iv.unbounded);
    CHECK(iv.case_tag == RateCase::AllNonPositive);
  }
  SUBCASE("mixed with non-positive sum is unbounded") {
    const SpectrumReport s = spectrum(parse_hamiltonian("-0.25 I\n0.75 Z"));
    // eigenvalues -1 and 0.5
    REQUIRE(s.eigenvalues[0] == doctest::Approx(-1.0));
    REQUIRE(s.eigenvalues[1] == doctest::Approx(0.5));
    const RateInterval iv = learning_rate_interval(s);
    CHECK(iv.unbounded);
    CHECK(iv.case_tag == RateCase::MixedUnbounded);
  }
  SUBCASE("balanced spectrum falls under the unbounded branch") {
    const RateInterval iv =
        learning_rate_interval(spectrum(parse_hamiltonian("1.0 Z")));
    CHECK(iv.unbounded);
  }
  SUBCASE("all non-negative spectrum is bounded") {
    const SpectrumReport s = spectrum(parse_hamiltonian("2.0 I\n1.0 Z"));
    // eigenvalues 1 and 3
    const RateInterval iv = learning_rate_interval(s);
    CHECK_FALSE(iv.unbounded);
    CHECK(iv.upper == doctest::Approx(0.25));
    CHECK(iv.case_tag == RateCase::AllNonNegative);
  }
}

TEST_CASE("rate_from_precision") {
  CHECK(rate_from_precision(1e-2).mu == doctest::Approx(0.05));
  CHECK(std::abs(rate_from_precision(1e-1).mu - 0.15811) < 1e-5);
  CHECK(rate_from_precision(4.0).mu == doctest::Approx(1.0));
  CHECK(rate_from_precision(1e-2).delta_t == doctest::Approx(0.1));
  CHECK_THROWS_AS(rate_from_precision(0.0), InvalidInput);
}

TEST_CASE("shift analysis") {
  const SpectrumReport s = spectrum(deuteron().hamiltonian);
  SUBCASE("tau = 0 reproduces the unshifted interval") {
    const RateInterval a = learning_rate_interval(s);
    const RateInterval b = shift_analysis(s, 0.0);
    CHECK(a.unbounded == b.unbounded);
    CHECK(a.upper == doctest::Approx(b.upper));
  }
  SUBCASE("tau = -(E_top + E_0)/2 unbounds the interval") {
    const double tau = -(s.top_energy() + s.ground_energy()) / 2.0;
    CHECK(shift_analysis(s, tau).unbounded);
    // slightly less shift stays bounded
    CHECK_FALSE(shift_analysis(s, tau + 0.05).unbounded);
  }
  SUBCASE("positive spectrum shifted far negative") {
    const SpectrumReport pos = spectrum(parse_hamiltonian("1.5 I\n0.5 Z"));
    const RateInterval iv = shift_analysis(pos, -5.0);
    CHECK(iv.unbounded);
    CHECK(iv.case_tag == RateCase::AllNonPositive);
  }
}

TEST_CASE("closed-form probabilities reproduce the simulated series") {
  const ModelPreset p = deuteron();
  const double mu = 0.05;
  QgdConfig cfg;
  cfg.hamiltonian = p.hamiltonian;
  cfg.initial_state = p.initial_state();
  cfg.mu = mu;
  cfg.identity_split = p.identity_split;
  cfg.ancilla_source = AncillaSource::Exact;
  cfg.max_steps = 25;
  cfg.convergence_epsilon = 1e-300;
  const Trajectory t = run(cfg);

  std::vector<double> overlaps_sq(t.spectrum.eigenvalues.size());
  for (std::size_t i = 0; i < overlaps_sq.size(); ++i) {
    std::complex<double> ov = 0.0;
    for (std::size_t w = 0; w < cfg.initial_state.dim(); ++w)
      ov += std::conj(t.spectrum.eigenvectors(w, i)) *
            cfg.initial_state.amplitude(w);
    overlaps_sq[i] = std::norm(ov);
  }
  const auto probs = closed_form_probability(
      t.spectrum.gradient_magnitudes, overlaps_sq, t.lcu.normalizer(), 25);
  for (int s = 1; s <= 25; ++s)
    CHECK(std::abs(probs[s - 1] - t.records[s].local_prob) < 1e-9);
}

TEST_CASE("closed form: ground-only overlap gives a constant series") {
  const std::vector<double> lambdas{1.3, 0.7};
  const std::vector<double> overlaps{1.0, 0.0};
  const auto probs = closed_form_probability(lambdas, overlaps, 2.0, 5);
  for (double p : probs)
    CHECK(p == doctest::Approx(1.3 * 1.3 / 4.0).epsilon(1e-12));
}

TEST_CASE("closed form: any start gives a non-decreasing series") {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 5;
    std::vector<double> lambdas(n), overlaps(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      lambdas[i] = 2.0 * u(rng) + 0.05;
      overlaps[i] = u(rng) + 1e-3;
      total += overlaps[i];
    }
    for (auto& c : overlaps) c /= total;
    const auto probs = closed_form_probability(lambdas, overlaps, 3.0, 12);
    for (std::size_t s = 1; s < probs.size(); ++s)
      CHECK(probs[s] + 1e-12 >= probs[s - 1]);
  }
}

TEST_CASE("second-moment inequality behind the monotone probabilities") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<double> lam(n), c(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      lam[i] = 3.0 * u(rng);
      c[i] = u(rng);
      total += c[i];
    }
    double m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = c[i] / total;
      m2 += lam[i] * lam[i] * w;
      m4 += lam[i] * lam[i] * lam[i] * lam[i] * w;
    }
    CHECK(m4 - m2 * m2 >= -1e-12);
  }
}

TEST_CASE("probability comparison against the Hadamard-disposal scheme") {
  SUBCASE("uniform weights give equality") {
    const PauliHamiltonian h = parse_hamiltonian("1.0 XX");
    const GradientLcu g = GradientLcu::build(h, 1.0 / 6.0);
    std::mt19937_64 rng(3);
    const StateVector phi = oracles::random_state(rng, 2);
    const ProbabilityComparison c = fqe_probability_comparison(g, phi);
    CHECK(c.margin == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("deuteron weights dominate strictly") {
    const ModelPreset p = deuteron();
    const GradientLcu g =
        GradientLcu::build(p.hamiltonian, 0.05, p.identity_split);
    const ProbabilityComparison c =
        fqe_probability_comparison(g, p.initial_state());
    CHECK(c.margin > 1e-4);
    CHECK(c.p > c.p_tilde);
  }
  SUBCASE("single branch is the trivial equality") {
    const PauliHamiltonian h = parse_hamiltonian("1.0 II");
    const double mu = 0.2;
    const double split[] = {1.0 - 2.0 * mu};
    const GradientLcu g = GradientLcu::build(h, mu, split);
    REQUIRE(g.branch_count() == 1);
    const StateVector phi = StateVector::zero_state(2);
    const ProbabilityComparison c = fqe_probability_comparison(g, phi);
    CHECK(c.margin == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("dominance holds on random instances") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> mu_dist(0.02, 0.3);
    for (int trial = 0; trial < 60; ++trial) {
      const PauliHamiltonian h =
          oracles::random_hamiltonian(rng, 1 + trial % 3);
      const GradientLcu g = GradientLcu::build(h, mu_dist(rng));
      const StateVector phi =
          oracles::random_state(rng, static_cast<int>(g.work_qubits()));
      const ProbabilityComparison c = fqe_probability_comparison(g, phi);
      CHECK(c.margin >= -1e-12);
    }
  }
}

TEST_CASE("gate cost: instantiated counts and depth pair") {
  const GateCostEstimate e = gate_cost_estimate(2, 7, 3);
  CHECK(e.t_total == 144);
  CHECK_FALSE(e.degenerate);
  const GateCostEstimate zero = gate_cost_estimate(2, 7, 0);
  CHECK(zero.t_total == 0);
  CHECK(zero.degenerate);
  const DepthComparison d = lcu_depth_comparison(10, 100);
  CHECK(d.hadamard_disposal == 110);
  CHECK(d.inverse_disposal == 120);
  const GateCostEstimate heis = gate_cost_estimate(2, 31, 5);
  CHECK(heis.t_total == 1600);
}

TEST_CASE("x-frame conjugation reproduces every control pattern") {
  std::mt19937_64 rng(83);
  for (std::size_t kt = 1; kt <= 3; ++kt) {
    // random 2x2 unitary-ish work block is enough for the identity check
    const StateVector r1 = oracles::random_state(rng, 1);
    Eigen::MatrixXcd p(2, 2);
    p << r1.amplitude(0), -std::conj(r1.amplitude(1)),
         r1.amplitude(1), std::conj(r1.amplitude(0));
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << kt);
         ++pattern) {
      const Eigen::MatrixXcd direct =
          controlled_unitary_dense(kt, pattern, p);
      const Eigen::MatrixXcd framed =
          sigma_x_conjugated_controlled(kt, pattern, p);
      CHECK((direct - framed).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("interval property: inside converges, outside can fail") {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bounded_cases = 0, tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PauliHamiltonian h =
        oracles::random_hamiltonian(rng, 1 + trial % 3);
    const SpectrumReport s = spectrum(h);
    if (s.degenerate_ground(1e-6)) continue;
    const RateInterval iv = learning_rate_interval(s);
    const double mu =
        iv.unbounded ? (0.05 + u(rng)) : iv.upper * (0.2 + 0.6 * u(rng));

    // contraction ratio decides how many steps 0.999 fidelity takes;
    // skip instances that need more than the 1e4-step budget
    double lam0 = std::abs(1.0 - 2.0 * mu * s.ground_energy());
    double lam1 = 0.0;
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
      lam1 = std::max(lam1, std::abs(1.0 - 2.0 * mu * s.eigenvalues[i]));
    const double ratio2 = (lam1 * lam1) / (lam0 * lam0);
    if (ratio2 > 1.0 - 1e-3) continue;
    ++tested;

    // start from a state with guaranteed ground overlap
    const StateVector u0 = s.ground_state();
    std::vector<std::complex<double>> amps(u0.dim());
    for (std::size_t i = 0; i < amps.size(); ++i)
      amps[i] = u0.amplitude(i) + 0.35 * std::complex<double>(u(rng), u(rng));
    const StateVector phi0 =
        StateVector::from_amplitudes(std::move(amps));

    QgdConfig cfg;
    cfg.hamiltonian = h;
    cfg.initial_state = phi0;
    cfg.mu = mu;
    cfg.ancilla_source = AncillaSource::Exact;
    cfg.max_steps = 10000;
    cfg.convergence_epsilon = 1e-13;
    const Trajectory t = run(cfg);
    CHECK(t.final_fidelity >= 0.999);
    if (!iv.unbounded) ++bounded_cases;
  }
  CHECK(bounded_cases > 20);
  CHECK(tested > 100);

  // an adversarial bounded spectrum where 1.2x the upper bound diverges
  const PauliHamiltonian h = parse_hamiltonian("1.0 I\n0.9 Z");  // E = 0.1, 1.9
  const SpectrumReport s = spectrum(h);
  const RateInterval iv = learning_rate_interval(s);
  REQUIRE_FALSE(iv.unbounded);
  const double mu_bad = iv.upper * 1.2;
  QgdConfig cfg;
  cfg.hamiltonian = h;
  cfg.initial_state = StateVector::from_amplitudes(
      {std::complex<double>(0.8, 0.0), std::complex<double>(0.6, 0.0)});
  cfg.mu = mu_bad;
  cfg.ancilla_source = AncillaSource::Exact;
  cfg.max_steps = 2000;
  cfg.convergence_epsilon = 1e-13;
  const Trajectory bad = run(cfg);
  CHECK(bad.final_fidelity < 0.9);
}
