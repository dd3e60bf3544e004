#include "triloc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace triloc {
namespace {

struct Simplex {
  std::vector<std::vector<double>> pts;
  std::vector<double> vals;  // objective, to be maximized
};

}  // namespace

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start, const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  result.x = start;
  result.value = f(start);
  result.evaluations = 1;

  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  double step = opts.initial_step;
  for (int round = 0; round <= opts.restarts; ++round) {
    const double round_start = result.value;

    Simplex s;
    s.pts.push_back(result.x);
    s.vals.push_back(result.value);
    for (std::size_t i = 0; i < n; ++i) {
      auto p = result.x;
      p[i] += step;
      s.vals.push_back(eval(p));
      s.pts.push_back(std::move(p));
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    for (int it = 0; it < opts.max_iters; ++it) {
      ++result.iterations;
      std::iota(order.begin(), order.end(), 0);
      // Descending by value; index breaks ties so the ordering is deterministic.
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return s.vals[a] != s.vals[b] ? s.vals[a] > s.vals[b] : a < b;
      });
      const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
      const double spread = s.vals[best] - s.vals[worst];
      if (spread <= opts.tol * (std::abs(s.vals[best]) + std::abs(s.vals[worst])) + 1e-300) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = order[k];
        for (std::size_t d = 0; d < n; ++d) centroid[d] += s.pts[idx][d];
      }
      for (auto& c : centroid) c /= static_cast<double>(n);

      for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + (centroid[d] - s.pts[worst][d]);
      const double fr = eval(trial);
      if (fr > s.vals[best]) {
        for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + 2.0 * (centroid[d] - s.pts[worst][d]);
        const double fe = eval(trial2);
        if (fe > fr) {
          s.pts[worst] = trial2;
          s.vals[worst] = fe;
        } else {
          s.pts[worst] = trial;
          s.vals[worst] = fr;
        }
        continue;
      }
      if (fr > s.vals[second]) {
        s.pts[worst] = trial;
        s.vals[worst] = fr;
        continue;
      }
      // Contraction, outside if the reflection beat the worst point.
      const bool outside = fr > s.vals[worst];
      for (std::size_t d = 0; d < n; ++d) {
        const double toward = outside ? trial[d] : s.pts[worst][d];
        trial2[d] = centroid[d] + 0.5 * (toward - centroid[d]);
      }
      const double fc = eval(trial2);
      if (fc > (outside ? fr : s.vals[worst])) {
        s.pts[worst] = trial2;
        s.vals[worst] = fc;
        continue;
      }
      // Shrink toward the best vertex.
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t idx = order[k];
        for (std::size_t d = 0; d < n; ++d) s.pts[idx][d] = s.pts[best][d] + 0.5 * (s.pts[idx][d] - s.pts[best][d]);
        s.vals[idx] = eval(s.pts[idx]);
      }
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (s.vals[k] > s.vals[best]) best = k;
    if (s.vals[best] > result.value) {
      result.value = s.vals[best];
      result.x = s.pts[best];
    }
    if (round > 0 && result.value - round_start <= opts.tol * std::max(1.0, std::abs(result.value))) break;
    step *= 0.25;
  }
  return result;
}

}  // namespace triloc
