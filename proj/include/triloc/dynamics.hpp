#pragma once

#include "triloc/cmatrix.hpp"
#include "triloc/state.hpp"

namespace triloc {

/// Lorentzian reservoir. Frequencies share one unit; the CLI fixes
/// lambda = 1 so that times are the dimensionless tau = lambda t.
struct ReservoirParams {
  double lambda = 1.0;  // spectral width
  double rabi = 0.0;    // vacuum Rabi frequency
  double delta = 0.0;   // qubit-cavity detuning

  /// R = rabi / lambda.
  double coupling_ratio() const { return rabi / lambda; }
  /// Omega_R = sqrt(4 rabi^2 + delta^2).
  double omega_r() const;
  /// Omega = sqrt(lambda^2 - Omega_R^2 - 2 i delta lambda), principal branch.
  Complex omega() const;

  /// Reservoir params with lambda = 1, rabi = R, detuning delta (in units of lambda).
  static ReservoirParams from_ratio(double r, double delta = 0.0) { return {1.0, r, delta}; }
};

/// Throws Error{InvalidArgument} unless lambda >= 0, rabi >= 0 and all finite.
void validate(const ReservoirParams& params);

/// Repeated non-selective measurement every `interval` (same time unit as
/// the reservoir params).
struct ZenoSchedule {
  double interval = 0.0;
  bool enabled = false;

  static ZenoSchedule none() { return {}; }
  static ZenoSchedule every(double interval) { return {interval, true}; }
};

struct TrajectoryPoint {
  double tau = 0.0;
  double survival = 1.0;
  DensityMatrix rho;
};

/// Survival amplitude of the W excitation,
///   E(t) = exp(-(lambda - i delta) t / 2) [cosh(Omega t / 2) + (lambda - i delta)/Omega sinh(Omega t / 2)].
/// Evaluated as a sum of two damped exponentials; |Omega t| < 1e-6 switches to
/// the Taylor expansion of the bracket.
Complex survival_amplitude(double t, const ReservoirParams& params);

/// The same expression evaluated with an explicit root `omega` of Omega^2.
/// Both roots give the same value.
Complex survival_amplitude_with_root(double t, const ReservoirParams& params, Complex omega);

/// |E(t)|^2.
double survival_probability(double t, const ReservoirParams& params);

/// Gamma_z(T) = -log(|E(T)|^2) / T. Throws Error{ZeroSurvival} when |E(T)|^2
/// vanishes (or underflows), Error{InvalidArgument} for T <= 0.
double zeno_rate(double interval, const ReservoirParams& params);

/// exp(-Gamma_z(T) t).
double zeno_survival(double t, double interval, const ReservoirParams& params);

/// s |W><W| + (1 - s) |000><000|.
DensityMatrix w_decay_state(double survival);

/// Reduced three-qubit state at time `tau` for a W state in the reservoir.
/// With measurements enabled the survival is exp(-Gamma_z(T) tau) instead of |E(tau)|^2.
TrajectoryPoint rho_w(double tau, const ReservoirParams& params, const ZenoSchedule& schedule = ZenoSchedule::none());

}  // namespace triloc
