#pragma once

#include <functional>
#include <span>
#include <vector>

namespace triloc {

struct NelderMeadOptions {
  double initial_step = 0.5;
  int max_iters = 400;
  /// Stop when the relative spread of simplex values falls below this.
  double tol = 1e-9;
  /// Restart a collapsed simplex around the incumbent at most this many
  /// times; each restart that fails to improve by `tol` ends the search.
  int restarts = 4;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

/// Maximizes `f` by the downhill simplex method (standard coefficients
/// 1, 2, 0.5, 0.5). Coordinates are unconstrained; periodic objectives need no
/// wrapping.
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start, const NelderMeadOptions& opts);

}  // namespace triloc
