#include "triloc/svetlichny.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "triloc/error.hpp"
#include "triloc/linalg.hpp"
#include "triloc/nelder_mead.hpp"
#include "triloc/parallel.hpp"

namespace triloc {
namespace {

constexpr std::uint64_t kGridSalt = 0x67726964ULL;        // "grid"
constexpr std::uint64_t kStartSalt = 0x7374617274ULL;     // "start"
constexpr std::uint64_t kMultistartSalt = 0x6d756c7469ULL;  // "multi"
constexpr int kMaxGridCombos = 6 * 6 * 6 * 6;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 apply(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Vec3 normalized_or_z(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) return {0.0, 0.0, 1.0};
  return {v[0] / n, v[1] / n, v[2] / n};
}

std::array<double, 8> random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 8> a{};
  // Polar/azimuth pairs uniform on the sphere: (alpha1,2), (alpha3,4), (beta1,2), (beta3,4).
  for (int v = 0; v < 4; ++v) {
    a[2 * v] = std::acos(1.0 - 2.0 * u(rng));
    a[2 * v + 1] = 2.0 * std::numbers::pi * u(rng);
  }
  return a;
}

struct Refinement {
  std::vector<double> x;
  double value = -1.0;
};

Refinement refine(const CorrelationTensor& t, const std::array<double, 8>& start, const OptimizerConfig& cfg) {
  NelderMeadOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.tol = cfg.tol;
  auto f = [&t](std::span<const double> a) { return svetlichny_objective(t, MeasurementSettings::from_flat(a)); };
  auto r = nelder_mead_maximize(f, std::vector<double>(start.begin(), start.end()), opts);
  return {std::move(r.x), r.value};
}

// All starting points for stage 2, in refinement-index order.
std::vector<std::array<double, 8>> collect_starts(const CorrelationTensor& t, const OptimizerConfig& cfg, bool parallel) {
  const int g = cfg.coarse_grid;
  const long long full = static_cast<long long>(g) * g * g * g;
  const int combos = static_cast<int>(std::min<long long>(full, kMaxGridCombos));

  std::vector<std::array<double, 8>> grid(static_cast<std::size_t>(combos));
  std::vector<double> scores(grid.size());
  auto grid_point = [&](int idx) {
    std::mt19937_64 rng(stream_seed(cfg.seed, kGridSalt, static_cast<std::uint64_t>(idx)));
    long long cell = idx;
    if (full > kMaxGridCombos) cell = std::uniform_int_distribution<long long>(0, full - 1)(rng);
    std::array<int, 4> digit{};
    for (auto& d : digit) {
      d = static_cast<int>(cell % g);
      cell /= g;
    }
    auto a = random_angles(rng);  // y, y' stay random
    const double polar_step = std::numbers::pi / g, azimuth_step = 2.0 * std::numbers::pi / g;
    a[0] = (digit[0] + 0.5) * polar_step;
    a[1] = digit[1] * azimuth_step;
    a[4] = (digit[2] + 0.5) * polar_step;
    a[5] = digit[3] * azimuth_step;
    grid[static_cast<std::size_t>(idx)] = a;
    scores[static_cast<std::size_t>(idx)] = svetlichny_objective(t, MeasurementSettings::from_flat(a));
  };
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < combos; ++i) grid_point(i);
  } else {
    for (int i = 0; i < combos; ++i) grid_point(i);
  }

  std::vector<int> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const int keep = std::min(cfg.refine_best, combos);
  std::partial_sort(order.begin(), order.begin() + keep, order.end(), [&](int a, int b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });

  std::vector<std::array<double, 8>> starts;
  starts.reserve(static_cast<std::size_t>(keep + cfg.starts));
  for (int k = 0; k < keep; ++k) starts.push_back(grid[static_cast<std::size_t>(order[k])]);
  for (int i = 0; i < cfg.starts; ++i) {
    std::mt19937_64 rng(stream_seed(cfg.seed, kStartSalt, static_cast<std::uint64_t>(i)));
    starts.push_back(random_angles(rng));
  }
  return starts;
}

SvetlichnyResult finish(const CorrelationTensor& t, const std::vector<Refinement>& runs, const OptimizerConfig& cfg) {
  // Max by value; lowest index wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].value > runs[best].value) best = i;

  SvetlichnyResult out;
  out.best_settings = MeasurementSettings::from_flat(runs[best].x);
  const auto lam = svetlichny_lambdas(t, out.best_settings);
  const Vec3 plus{lam.lambda0[0] + lam.lambda1[0], lam.lambda0[1] + lam.lambda1[1], lam.lambda0[2] + lam.lambda1[2]};
  const Vec3 minus{lam.lambda0[0] - lam.lambda1[0], lam.lambda0[1] - lam.lambda1[1], lam.lambda0[2] - lam.lambda1[2]};
  out.optimal_x = normalized_or_z(plus);
  out.optimal_x_prime = normalized_or_z(minus);
  out.value = std::max(0.0, runs[best].value);
  out.starts_used = static_cast<int>(runs.size());
  out.seed = cfg.seed;
  out.best_start = static_cast<int>(best);
  return out;
}

SvetlichnyResult run(const CorrelationTensor& t, const OptimizerConfig& cfg, bool parallel) {
  validate(cfg);
  const auto starts = collect_starts(t, cfg, parallel);
  std::vector<Refinement> runs(starts.size());
  const int n = static_cast<int>(starts.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (int i = 0; i < n; ++i) runs[static_cast<std::size_t>(i)] = refine(t, starts[static_cast<std::size_t>(i)], cfg);
  } else {
    for (int i = 0; i < n; ++i) runs[static_cast<std::size_t>(i)] = refine(t, starts[static_cast<std::size_t>(i)], cfg);
  }
  return finish(t, runs, cfg);
}

}  // namespace

Vec3 unit_vector(double polar, double azimuth) {
  return {std::sin(polar) * std::sin(azimuth), std::sin(polar) * std::cos(azimuth), std::cos(polar)};
}

std::array<double, 8> MeasurementSettings::flat() const {
  return {alpha[0], alpha[1], alpha[2], alpha[3], beta[0], beta[1], beta[2], beta[3]};
}

MeasurementSettings MeasurementSettings::from_flat(std::span<const double> a) {
  if (a.size() != 8) throw Error(ErrorKind::InvalidArgument, "measurement settings need 8 angles");
  MeasurementSettings s;
  for (int i = 0; i < 4; ++i) {
    s.alpha[i] = a[i];
    s.beta[i] = a[4 + i];
  }
  return s;
}

Mat3 t_contract(const CorrelationTensor& t, const Vec3& d) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = t(i + 1, j + 1, 1) * d[0] + t(i + 1, j + 1, 2) * d[1] + t(i + 1, j + 1, 3) * d[2];
  return m;
}

Mat3 t_slice(const CorrelationTensor& t, const Vec3& direction) {
  if (std::abs(norm(direction) - 1.0) > 1e-10) throw Error(ErrorKind::NonUnitVector, "slice direction must be a unit vector");
  return t_contract(t, direction);
}

LambdaPair svetlichny_lambdas(const CorrelationTensor& t, const MeasurementSettings& s) {
  const Mat3 tz = t_contract(t, s.z());
  const Mat3 tzp = t_contract(t, s.z_prime());
  const Vec3 y = s.y(), yp = s.y_prime();
  const Vec3 a = apply(tzp, y), b = apply(tz, yp), c = apply(tz, y), d = apply(tzp, yp);
  return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}, {c[0] - d[0], c[1] - d[1], c[2] - d[2]}};
}

double svetlichny_objective(const CorrelationTensor& t, const MeasurementSettings& s) {
  const auto [l0, l1] = svetlichny_lambdas(t, s);
  const Vec3 plus{l0[0] + l1[0], l0[1] + l1[1], l0[2] + l1[2]};
  const Vec3 minus{l0[0] - l1[0], l0[1] - l1[1], l0[2] - l1[2]};
  return norm(plus) + norm(minus);
}

double svetlichny_objective_radical(const CorrelationTensor& t, const MeasurementSettings& s) {
  const auto [l0, l1] = svetlichny_lambdas(t, s);
  const double a = dot(l0, l0) + dot(l1, l1);
  const double c = dot(l0, l1);
  const double f = 0.5 * (a + std::sqrt(std::max(0.0, a * a - 4.0 * c * c)));
  return 2.0 * std::sqrt(f);
}

void validate(const OptimizerConfig& cfg) {
  if (cfg.starts < 1 || cfg.coarse_grid < 1 || cfg.max_iters < 1 || !(cfg.tol > 0.0) || cfg.refine_best < 0)
    throw Error(ErrorKind::InvalidArgument, "optimizer config fields must be positive");
}

SvetlichnyResult svetlichny_max(const CorrelationTensor& t, const OptimizerConfig& cfg) { return run(t, cfg, true); }

SvetlichnyResult svetlichny_max(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return svetlichny_max(correlation_tensor(rho), cfg);
}

SvetlichnyResult svetlichny_max_serial(const CorrelationTensor& t, const OptimizerConfig& cfg) { return run(t, cfg, false); }

SvetlichnyResult svetlichny_max_multistart(const CorrelationTensor& t, const OptimizerConfig& cfg) {
  validate(cfg);
  std::vector<Refinement> runs(static_cast<std::size_t>(cfg.starts));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int i = 0; i < cfg.starts; ++i) {
    std::mt19937_64 rng(stream_seed(cfg.seed, kMultistartSalt, static_cast<std::uint64_t>(i)));
    runs[static_cast<std::size_t>(i)] = refine(t, random_angles(rng), cfg);
  }
  return finish(t, runs, cfg);
}

double upper_bound(const CorrelationTensor& t, Matricization m) {
  // M is 3x9; its largest singular value is sqrt(lambda_max(M M^T)).
  std::array<std::array<double, 9>, 3> mat{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (m == Matricization::FirstParty) {
          mat[i][3 * j + k] = t(i + 1, j + 1, k + 1);
        } else {
          mat[k][3 * i + j] = t(i + 1, j + 1, k + 1);
        }
      }
  std::vector<double> gram(9, 0.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int x = 0; x < 9; ++x) gram[static_cast<std::size_t>(r * 3 + c)] += mat[r][x] * mat[c][x];
  const double top = symmetric_eigenvalues(std::move(gram), 3).back();
  return 4.0 * std::sqrt(std::max(0.0, top));
}

double upper_bound(const DensityMatrix& rho, Matricization m) { return upper_bound(correlation_tensor(rho), m); }

Mat3 two_qubit_correlations(const DensityMatrix& rho_ab) {
  if (rho_ab.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "CHSH needs a two-qubit state");
  Mat3 tm{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) tm[i - 1][j - 1] = (rho_ab.matrix() * kron(pauli(i), pauli(j))).trace().real();
  return tm;
}

double chsh_max(const DensityMatrix& rho_ab) {
  const Mat3 tm = two_qubit_correlations(rho_ab);
  std::vector<double> tt(9, 0.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) tt[static_cast<std::size_t>(r * 3 + c)] += tm[k][r] * tm[k][c];
  const auto u = symmetric_eigenvalues(std::move(tt), 3);
  return 2.0 * std::sqrt(std::max(0.0, u[2] + u[1]));
}

}  // namespace triloc
