#include <doctest.h>

#include <cmath>
#include <random>

#include "triloc/dynamics.hpp"
#include "triloc/error.hpp"
#include "triloc/state.hpp"

using namespace triloc;

namespace {

int local_maxima(double r, double tau_max, int points) {
  const auto params = ReservoirParams::from_ratio(r);
  int count = 0;
  double a = survival_probability(0.0, params), b = survival_probability(tau_max / points, params);
  for (int i = 2; i <= points; ++i) {
    const double c = survival_probability(tau_max * i / points, params);
    if (b > a && b > c) ++count;
    a = b;
    b = c;
  }
  return count;
}

}  // namespace

TEST_CASE("survival amplitude: initial value and limits") {
  for (double r : {0.1, 0.5, 1.0, 20.0})
    for (double delta : {0.0, 0.7}) {
      const auto e = survival_amplitude(0.0, ReservoirParams::from_ratio(r, delta));
      CHECK(std::abs(e - Complex{1.0, 0.0}) < 1e-15);
    }

  // No damping and no detuning: Rabi oscillation cos(rabi t).
  const ReservoirParams lossless{0.0, 1.3, 0.0};
  for (double t : {0.1, 0.7, 2.0, 5.0}) CHECK(survival_probability(t, lossless) == doctest::Approx(std::pow(std::cos(1.3 * t), 2)).epsilon(1e-12));

  // Critical damping, Omega = 0: exp(-lambda t / 2) (1 + lambda t / 2).
  const auto critical = ReservoirParams::from_ratio(0.5);
  for (double t : {0.0, 0.3, 1.0, 4.0}) {
    const double expected = std::exp(-t / 2.0) * (1.0 + t / 2.0);
    CHECK(std::abs(survival_amplitude(t, critical).real() - expected) < 1e-12);
    CHECK(std::abs(survival_amplitude(t, ReservoirParams::from_ratio(0.5 + 1e-6)).real() - expected) < 1e-5);
    CHECK(std::abs(survival_amplitude(t, ReservoirParams::from_ratio(0.5 - 1e-6)).real() - expected) < 1e-5);
  }
}

TEST_CASE("survival amplitude does not depend on the square-root branch") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> r(0.0, 30.0), d(-5.0, 5.0), t(0.0, 20.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto params = ReservoirParams::from_ratio(r(rng), d(rng));
    const double time = t(rng);
    const Complex a = survival_amplitude_with_root(time, params, params.omega());
    const Complex b = survival_amplitude_with_root(time, params, -params.omega());
    CHECK(std::abs(a - b) < 1e-12);
    CHECK(std::abs(survival_amplitude(time, params)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("survival: monotone when overdamped, oscillating when strong") {
  for (double r : {0.05, 0.1, 0.3, 0.5}) {
    const auto params = ReservoirParams::from_ratio(r);
    double prev = 1.0;
    for (int i = 1; i <= 3000; ++i) {
      const double s = survival_probability(i * 0.01, params);
      CHECK(s <= prev + 1e-15);
      prev = s;
    }
  }
  CHECK(local_maxima(10.0, 5.0, 20000) >= 3);
  CHECK(local_maxima(20.0, 5.0, 20000) >= 3);
}

TEST_CASE("rho_w: endpoints") {
  const auto params = ReservoirParams::from_ratio(2.0);
  const auto start = rho_w(0.0, params);
  CHECK(start.survival == doctest::Approx(1.0));
  CHECK(max_abs_diff(start.rho.matrix(), w_state().matrix()) < 1e-14);
  CHECK(max_abs_diff(w_decay_state(0.0).matrix(), ground_state().matrix()) == 0.0);
  CHECK(max_abs_diff(w_decay_state(1.0).matrix(), w_state().matrix()) < 1e-15);
}

TEST_CASE("zeno: rate and survival") {
  for (double r : {0.1, 1.0, 20.0}) {
    const auto params = ReservoirParams::from_ratio(r);
    for (double interval : {0.001, 0.1, 1.0}) {
      const auto free = rho_w(interval, params);
      const auto measured = rho_w(interval, params, ZenoSchedule::every(interval));
      CHECK(std::abs(measured.survival - free.survival) < 1e-12);
    }
  }
  // Short intervals: Gamma_z ~ rabi^2 T.
  const auto one = ReservoirParams::from_ratio(1.0);
  CHECK(zeno_rate(1e-4, one) / 1e-4 == doctest::Approx(1.0).epsilon(0.01));

  const auto strong = ReservoirParams::from_ratio(20.0);
  CHECK(zeno_rate(0.001, strong) < zeno_rate(0.01, strong));
  CHECK(zeno_survival(0.5, 0.001, strong) > zeno_survival(0.5, 0.01, strong));

  // exp(-0.02 T) underflows.
  try {
    zeno_rate(1e5, ReservoirParams::from_ratio(0.1));
    FAIL("expected ZeroSurvival");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroSurvival);
  }
  CHECK_THROWS_AS(zeno_rate(0.0, one), Error);
  CHECK_THROWS_AS(zeno_rate(-1.0, one), Error);
}

TEST_CASE("reservoir parameter validation") {
  CHECK_NOTHROW(validate(ReservoirParams{0.0, 1.0, 0.0}));
  CHECK_THROWS_AS(validate(ReservoirParams{-1.0, 1.0, 0.0}), Error);
  CHECK_THROWS_AS(validate(ReservoirParams{1.0, -1.0, 0.0}), Error);
  CHECK_THROWS_AS(validate(ReservoirParams{1.0, std::nan(""), 0.0}), Error);
}

TEST_CASE("trajectory states are valid density matrices") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> tau(0.0, 50.0), r(0.0, 40.0), d(-3.0, 3.0), t(1e-4, 2.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto params = ReservoirParams::from_ratio(r(rng), d(rng));
    const auto schedule = trial % 4 == 0 ? ZenoSchedule::every(t(rng)) : ZenoSchedule::none();
    TrajectoryPoint point{0.0, 1.0, w_state()};
    try {
      point = rho_w(tau(rng), params, schedule);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ZeroSurvival);
      continue;
    }
    CHECK(point.survival >= 0.0);
    CHECK(point.survival <= 1.0 + 1e-12);
    CHECK_FALSE(density_matrix_defect(point.rho.matrix()).has_value());
  }
}
