#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "triloc/state.hpp"

namespace triloc {

using Vec3 = std::array<double, 3>;
/// Row-major 3x3 real matrix.
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Spherical parametrization of a unit vector:
/// (sin a sin b, sin a cos b, cos a).
Vec3 unit_vector(double polar, double azimuth);

/// Eight angles fixing the settings of the second and third parties. z, z'
/// belong to party C and y, y' to party B; A's settings are solved in closed
/// form.
struct MeasurementSettings {
  std::array<double, 4> alpha{};  // z(alpha1, alpha2), y(alpha3, alpha4)
  std::array<double, 4> beta{};   // z'(beta1, beta2), y'(beta3, beta4)

  Vec3 z() const { return unit_vector(alpha[0], alpha[1]); }
  Vec3 z_prime() const { return unit_vector(beta[0], beta[1]); }
  Vec3 y() const { return unit_vector(alpha[2], alpha[3]); }
  Vec3 y_prime() const { return unit_vector(beta[2], beta[3]); }

  /// Flattened as (alpha1..4, beta1..4).
  std::array<double, 8> flat() const;
  static MeasurementSettings from_flat(std::span<const double> angles);
};

/// T_d = sum_k d_k T_k with (T_k)_ij = t_ijk, i, j, k in 1..3.
/// Throws Error{NonUnitVector} if |direction| differs from 1 by more than 1e-10.
Mat3 t_slice(const CorrelationTensor& t, const Vec3& direction);

/// Same contraction without the unit-norm check (linear in `direction`).
Mat3 t_contract(const CorrelationTensor& t, const Vec3& direction);

struct LambdaPair {
  Vec3 lambda0;  // T_{z'} y + T_z y'
  Vec3 lambda1;  // T_z y - T_{z'} y'
};
LambdaPair svetlichny_lambdas(const CorrelationTensor& t, const MeasurementSettings& s);

/// Svetlichny expectation at the given B/C settings, maximized over A's two
/// settings: |lambda0 + lambda1| + |lambda0 - lambda1|.
double svetlichny_objective(const CorrelationTensor& t, const MeasurementSettings& s);

/// The same quantity written as 2 sqrt(F) with
/// F = (|l0|^2 + |l1|^2 + sqrt((|l0|^2 + |l1|^2)^2 - 4 <l0,l1>^2)) / 2.
double svetlichny_objective_radical(const CorrelationTensor& t, const MeasurementSettings& s);

struct OptimizerConfig {
  int starts = 64;
  int coarse_grid = 6;
  int max_iters = 400;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  /// Coarse-grid seeds that get refined in stage 2.
  int refine_best = 8;
};

/// Throws Error{InvalidArgument} for non-positive fields.
void validate(const OptimizerConfig& cfg);

struct SvetlichnyResult {
  double value = 0.0;
  MeasurementSettings best_settings;
  Vec3 optimal_x{};
  Vec3 optimal_x_prime{};
  int starts_used = 0;
  std::uint64_t seed = 0;
  /// Index of the refinement that produced `value` (coarse seeds first, then
  /// random starts).
  int best_start = -1;
};

/// Maximal Svetlichny value over all measurement settings.
///
/// Stage 1 scores a coarse product grid over the four angles of z and z'
/// (coarse_grid points per angle, at most 6^4 combinations, sampled down
/// beyond that) with y, y' drawn at random. Stage 2 runs Nelder-Mead from the
/// best `refine_best` grid seeds and from `starts` uniformly random settings.
/// Every refinement owns an RNG stream keyed by (seed, index), so the result
/// does not depend on the thread count. Refinements run in parallel under
/// OpenMP.
SvetlichnyResult svetlichny_max(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
SvetlichnyResult svetlichny_max(const CorrelationTensor& t, const OptimizerConfig& cfg = {});

/// Single-threaded reference for svetlichny_max; identical output.
SvetlichnyResult svetlichny_max_serial(const CorrelationTensor& t, const OptimizerConfig& cfg = {});

/// Independent route: pure multistart simplex from `cfg.starts` random points,
/// no grid seeding. Used to cross-check svetlichny_max.
SvetlichnyResult svetlichny_max_multistart(const CorrelationTensor& t, const OptimizerConfig& cfg = {});

enum class Matricization {
  /// Rows indexed by the first party, columns by the flattened (j, k).
  FirstParty,
  /// Rows indexed by the third party, columns by (i, j). Does not reproduce
  /// the reference bounds; kept as a negative control.
  ThirdParty,
};

/// 4 * largest singular value of the 3x9 matricization of t_ijk (i,j,k >= 1).
double upper_bound(const CorrelationTensor& t, Matricization m = Matricization::FirstParty);
double upper_bound(const DensityMatrix& rho, Matricization m = Matricization::FirstParty);

/// Maximal CHSH value of a two-qubit state, 2 sqrt(u1 + u2) with u1 >= u2 the
/// two largest eigenvalues of T^T T, T_ij = tr(rho s_i (x) s_j).
/// Throws Error{DimensionMismatch} unless rho is 4x4.
double chsh_max(const DensityMatrix& rho_ab);

/// Two-qubit correlation matrix T_ij = tr(rho s_i (x) s_j), i, j in 1..3.
Mat3 two_qubit_correlations(const DensityMatrix& rho_ab);

}  // namespace triloc
