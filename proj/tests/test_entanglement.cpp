#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "triloc/dynamics.hpp"
#include "triloc/entanglement.hpp"
#include "triloc/error.hpp"
#include "triloc/linalg.hpp"
#include "triloc/random_state.hpp"
#include "triloc/state.hpp"

using namespace triloc;
using std::numbers::pi;

TEST_CASE("trace_norm: examples") {
  CHECK(trace_norm(pauli(3)) == doctest::Approx(2.0));
  CHECK(trace_norm(CMatrix::identity(8) * 0.125) == doctest::Approx(1.0));
  CHECK(trace_norm(CMatrix(4, 4)) == 0.0);
}

TEST_CASE("negativity: examples") {
  const auto w = w_state();
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) CHECK(negativity(w, q) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-13));

  const auto w_ab = partial_trace(w, {Qubit::A, Qubit::B});
  CHECK(negativity(w_ab, Qubit::A) == doctest::Approx((std::sqrt(5.0) - 1.0) / 3.0).epsilon(1e-13));
  CHECK(negativity(w_ab, Qubit::B) == doctest::Approx((std::sqrt(5.0) - 1.0) / 3.0).epsilon(1e-13));

  const CMatrix diag{{0.1, 0, 0, 0}, {0, 0.2, 0, 0}, {0, 0, 0.3, 0}, {0, 0, 0, 0.4}};
  CHECK(negativity(DensityMatrix(diag), Qubit::A) == 0.0);
  CHECK(negativity(ground_state(), Qubit::B) == 0.0);

  try {
    negativity(DensityMatrix(CMatrix{{1, 0}, {0, 0}}), Qubit::A);
    FAIL("expected BadSubsystem");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadSubsystem);
  }
}

TEST_CASE("negativity equals twice the sum of negative partial-transpose eigenvalues") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = random_density_matrix(rng, trial % 2 ? 8 : 4, trial % 3 == 0 ? 1 : 0);
    const Qubit q = static_cast<Qubit>(trial % static_cast<int>(rho.qubits()));
    double neg = 0.0;
    for (double e : oracle::eigenvalues(partial_transpose(rho, q)))
      if (e < 0.0) neg += -e;
    const double expected = 2.0 * neg < 1e-10 ? 0.0 : 2.0 * neg;
    CHECK(std::abs(negativity(rho, q) - expected) < 1e-10);
    CHECK(negativity(rho, q) >= 0.0);
  }
}

TEST_CASE("pi_tangle: reference states") {
  CHECK(pi_tangle(ground_state()).pi_abc == 0.0);

  const auto w = pi_tangle(w_state());
  CHECK(w.pi_abc == doctest::Approx(4.0 * (std::sqrt(5.0) - 1.0) / 9.0).epsilon(1e-12));
  CHECK(std::abs(w.pi_a - w.pi_b) < 1e-12);
  CHECK(std::abs(w.pi_b - w.pi_c) < 1e-12);
  for (double n : w.n_pairwise) CHECK(n == doctest::Approx((std::sqrt(5.0) - 1.0) / 3.0).epsilon(1e-12));

  const auto ghz = pi_tangle(ghz_class(1.0, pi / 4, pi / 2));
  CHECK(ghz.pi_abc == doctest::Approx(1.0).epsilon(1e-12));
  for (double n : ghz.n_pairwise) CHECK(n == 0.0);

  CHECK(pi_tangle(ghz_class(0.0, 0.5, 0.5)).pi_abc == 0.0);
}

TEST_CASE("pi_tangle: one-vs-two negativity of pure states matches 2 s1 s2") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_pure_vector(rng, 8);
    const auto s = oracle::schmidt_a_bc(psi);
    const auto p = pi_tangle(DensityMatrix(CMatrix::outer(psi)));
    CHECK(std::abs(p.n_one_vs_two[0] - 2.0 * s[0] * s[1]) < 1e-9);
  }
}

TEST_CASE("pi_tangle: W trajectory is symmetric and a function of the survival") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> tau(0.0, 10.0), r(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto point = rho_w(tau(rng), ReservoirParams::from_ratio(r(rng)));
    const auto p = pi_tangle(point.rho);
    CHECK(std::abs(p.pi_a - p.pi_b) < 1e-12);
    CHECK(std::abs(p.pi_b - p.pi_c) < 1e-12);
    const auto same = pi_tangle(w_decay_state(point.survival));
    CHECK(std::abs(same.pi_abc - p.pi_abc) < 1e-12);
  }
}

TEST_CASE("pi_tangle is non-decreasing in the W survival") {
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double pi_abc = pi_tangle(w_decay_state(i / 1000.0)).pi_abc;
    CHECK(pi_abc >= prev - 1e-12);
    prev = pi_abc;
  }
}
