#include "triloc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triloc/error.hpp"

namespace triloc {
namespace {

constexpr double kTaylorThreshold = 1e-6;

}  // namespace

double ReservoirParams::omega_r() const { return std::sqrt(4.0 * rabi * rabi + delta * delta); }

Complex ReservoirParams::omega() const {
  const double wr = omega_r();
  return std::sqrt(Complex{lambda * lambda - wr * wr, -2.0 * delta * lambda});
}

void validate(const ReservoirParams& p) {
  if (!std::isfinite(p.lambda) || !std::isfinite(p.rabi) || !std::isfinite(p.delta))
    throw Error(ErrorKind::InvalidArgument, "reservoir parameters must be finite");
  if (p.lambda < 0.0) throw Error(ErrorKind::InvalidArgument, "lambda must be non-negative");
  if (p.rabi < 0.0) throw Error(ErrorKind::InvalidArgument, "Rabi frequency must be non-negative");
}

Complex survival_amplitude_with_root(double t, const ReservoirParams& p, Complex omega) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be non-negative");
  const Complex a{p.lambda, -p.delta};  // lambda - i delta
  if (std::abs(omega * t) < kTaylorThreshold) {
    // cosh(x/2) ~ 1 + x^2/8, sinh(Omega t/2)/Omega ~ t/2 (1 + (Omega t)^2/24)
    const Complex w2t2 = omega * omega * t * t;
    const Complex bracket = 1.0 + w2t2 / 8.0 + a * (t / 2.0) * (1.0 + w2t2 / 24.0);
    return std::exp(-a * t / 2.0) * bracket;
  }
  // e^{-at/2}[cosh + (a/W) sinh] = ((1 + a/W) e^{(W-a)t/2} + (1 - a/W) e^{-(W+a)t/2}) / 2
  const Complex ratio = a / omega;
  return 0.5 * ((1.0 + ratio) * std::exp((omega - a) * t / 2.0) + (1.0 - ratio) * std::exp(-(omega + a) * t / 2.0));
}

Complex survival_amplitude(double t, const ReservoirParams& params) {
  validate(params);
  return survival_amplitude_with_root(t, params, params.omega());
}

double survival_probability(double t, const ReservoirParams& params) { return std::norm(survival_amplitude(t, params)); }

double zeno_rate(double interval, const ReservoirParams& params) {
  if (!(interval > 0.0)) throw Error(ErrorKind::InvalidArgument, "measurement interval must be positive");
  const double p = survival_probability(interval, params);
  if (!(p > std::numeric_limits<double>::min()))
    throw Error(ErrorKind::ZeroSurvival, "survival probability vanishes at the measurement interval");
  return std::max(0.0, -std::log(p) / interval);
}

double zeno_survival(double t, double interval, const ReservoirParams& params) {
  return std::exp(-zeno_rate(interval, params) * t);
}

DensityMatrix w_decay_state(double survival) {
  if (!(survival >= 0.0 && survival <= 1.0 + 1e-12)) throw Error(ErrorKind::InvalidArgument, "survival must lie in [0, 1]");
  const double s = std::min(survival, 1.0);
  CMatrix m(8, 8);
  constexpr std::size_t excited[] = {0b100, 0b010, 0b001};
  for (std::size_t r : excited)
    for (std::size_t c : excited) m(r, c) = s / 3.0;
  m(0, 0) = 1.0 - s;
  return DensityMatrix::from_trusted(std::move(m));
}

TrajectoryPoint rho_w(double tau, const ReservoirParams& params, const ZenoSchedule& schedule) {
  if (!(tau >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tau must be non-negative");
  if (schedule.enabled && !(schedule.interval > 0.0))
    throw Error(ErrorKind::InvalidArgument, "measurement interval must be positive");
  const double s = schedule.enabled ? zeno_survival(tau, schedule.interval, params) : survival_probability(tau, params);
  return {tau, std::min(s, 1.0), w_decay_state(s)};
}

}  // namespace triloc
