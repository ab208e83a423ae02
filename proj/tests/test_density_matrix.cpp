#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgd/density_matrix.hpp"
#include "qgd/errors.hpp"
#include "qgd/models.hpp"

using namespace qgd;

namespace {

DensityMatrix random_mixed(std::mt19937_64& rng, int n, int rank = 3) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::uniform_real_distribution<double> w(0.1, 1.0);
  double total = 0.0;
  for (int r = 0; r < rank; ++r) {
    const StateVector psi = oracles::random_state(rng, n);
    const Eigen::VectorXcd v = oracles::to_eigen(psi);
    const double weight = w(rng);
    m += weight * (v * v.adjoint());
    total += weight;
  }
  return DensityMatrix::from_matrix(m / total);
}

}  // namespace

TEST_CASE("pure embedding agrees with the statevector backend") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 15; ++trial) {
    StateVector psi = oracles::random_state(rng, 3);
    DensityMatrix rho = DensityMatrix::from_pure(psi);
    for (int g = 0; g < 6; ++g) {
      GateOp op = g % 2 == 0 ? ry(g % 3, angle(rng)) : cnot(g % 3, (g + 1) % 3);
      psi.apply(op);
      rho.apply(op);
    }
    const Eigen::VectorXcd v = oracles::to_eigen(psi);
    CHECK((rho.matrix() - v * v.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(rho.is_valid());
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("block unitary on mixed states matches the dense conjugation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const PauliHamiltonian h = oracles::random_hamiltonian(rng, 2);
    const GradientLcu g = GradientLcu::build(h, 0.09);
    const int m = static_cast<int>(g.ancilla_qubits() + g.work_qubits());
    DensityMatrix rho = random_mixed(rng, m);
    const Eigen::MatrixXcd b = oracles::dense_block_unitary(g);
    const Eigen::MatrixXcd expect = b * rho.matrix() * b.adjoint();
    rho.apply_block_unitary(g);
    CHECK((rho.matrix() - expect).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("depolarize: boundary strengths") {
  std::mt19937_64 rng(7);
  const DensityMatrix rho = random_mixed(rng, 2);
  const DensityMatrix same = depolarize(rho, 0.0);
  CHECK((same.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);
  const DensityMatrix mixed = depolarize(rho, 1.0);
  CHECK((mixed.matrix() -
         Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(depolarize(rho, 1.5), InvalidInput);
  CHECK_THROWS_AS(depolarize(rho, -0.1), InvalidInput);
}

TEST_CASE("depolarize: closed-form purity on a pure state") {
  const StateVector phi = deuteron_initial_state();
  const DensityMatrix rho = DensityMatrix::from_pure(phi);
  const double beta = 0.04;
  const double dim = 4.0;
  const DensityMatrix out = depolarize(rho, beta);
  const double expected = (1 - beta) * (1 - beta) +
                          2.0 * (1 - beta) * beta / dim + beta * beta / dim;
  CHECK(out.purity() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("depolarize: linear and validity-preserving") {
  std::mt19937_64 rng(11);
  const DensityMatrix a = random_mixed(rng, 2);
  const DensityMatrix b = random_mixed(rng, 2);
  const double beta = 0.3, w = 0.7;
  const DensityMatrix convex =
      DensityMatrix::from_matrix(w * a.matrix() + (1 - w) * b.matrix());
  const Eigen::MatrixXcd lhs = depolarize(convex, beta).matrix();
  const Eigen::MatrixXcd rhs = w * depolarize(a, beta).matrix() +
                               (1 - w) * depolarize(b, beta).matrix();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(depolarize(a, beta).is_valid());
}

TEST_CASE("projection and trace bookkeeping") {
  std::mt19937_64 rng(13);
  DensityMatrix joint = random_mixed(rng, 4);
  const DmProjectionResult r = project_ancilla_zero(joint, 2);
  CHECK(r.work.num_qubits() == 2);
  CHECK(r.work.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.probability > 0.0);
  CHECK(r.probability < 1.0);
  CHECK(r.work.is_valid(1e-9));
}

TEST_CASE("expectation and fidelity agree with the pure backend") {
  std::mt19937_64 rng(17);
  const PauliHamiltonian h = oracles::random_hamiltonian(rng, 2);
  const StateVector psi = oracles::random_state(rng, 2);
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  CHECK(expectation(rho, h) ==
        doctest::Approx(expectation(psi, h)).epsilon(1e-10));
  const StateVector ref = oracles::random_state(rng, 2);
  const double f_pure = fidelity(psi, ref);
  CHECK(fidelity(rho, ref) == doctest::Approx(f_pure * f_pure).epsilon(1e-10));
}

TEST_CASE("maximally mixed state fidelity is 1/2^n") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  const StateVector ref = deuteron_initial_state();
  CHECK(fidelity(rho, ref) == doctest::Approx(0.25).epsilon(1e-12));
}
