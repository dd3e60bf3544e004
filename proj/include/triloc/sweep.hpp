#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triloc/dynamics.hpp"
#include "triloc/svetlichny.hpp"

namespace triloc {

struct MetricSet {
  bool svetlichny = false;  // also fills s_bound
  bool chsh = false;
  bool pi_tangle = false;
  bool survival = false;

  static MetricSet all() { return {true, true, true, true}; }
};

/// Parses a comma-separated list of svetlichny, chsh, pi_tangle, survival.
MetricSet parse_metrics(const std::string& list);

/// One row of a dynamics sweep; metrics that were not requested stay empty.
struct SweepRow {
  double tau = 0.0;
  double r = 0.0;
  double delta = 0.0;
  std::optional<double> s_svetlichny;
  std::optional<double> s_bound;
  std::optional<double> chsh_ab;
  std::optional<double> pi_tangle;
  std::optional<double> survival;
  std::optional<std::string> error;
};

struct SweepSpec {
  std::vector<double> r_values;  // R = rabi / lambda, lambda = 1
  std::vector<double> taus;
  double delta = 0.0;
  ZenoSchedule schedule;
  MetricSet metrics = MetricSet::all();
  OptimizerConfig optimizer;
};

/// `count` evenly spaced points on [lo, hi], both ends included.
std::vector<double> linspace(double lo, double hi, int count);

/// Rows ordered by R index, then tau index. Row failures land in the error
/// column. Throws Error{InvalidArgument} for empty or non-increasing grids.
/// Rows are evaluated in parallel under OpenMP.
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Single-threaded reference for sweep; identical output.
std::vector<SweepRow> sweep_serial(const SweepSpec& spec);

/// Evaluates the requested metrics on one W-trajectory point.
SweepRow evaluate_row(double tau, double r, const SweepSpec& spec);

}  // namespace triloc
