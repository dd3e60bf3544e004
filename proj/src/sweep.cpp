#include "triloc/sweep.hpp"

#include <sstream>

#include "triloc/entanglement.hpp"
#include "triloc/error.hpp"
#include "triloc/parallel.hpp"

namespace triloc {
namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, std::string(name) + " grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw Error(ErrorKind::InvalidArgument, std::string(name) + " grid must be strictly increasing");
}

std::vector<SweepRow> run(const SweepSpec& spec, bool parallel) {
  check_grid(spec.r_values, "R");
  check_grid(spec.taus, "tau");
  validate(spec.optimizer);
  const std::size_t nt = spec.taus.size();
  const int total = static_cast<int>(spec.r_values.size() * nt);
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  auto fill = [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    rows[idx] = evaluate_row(spec.taus[idx % nt], spec.r_values[idx / nt], spec);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (int i = 0; i < total; ++i) fill(i);
  } else {
    for (int i = 0; i < total; ++i) fill(i);
  }
  return rows;
}

}  // namespace

MetricSet parse_metrics(const std::string& list) {
  MetricSet m;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "svetlichny") m.svetlichny = true;
    else if (item == "chsh") m.chsh = true;
    else if (item == "pi_tangle") m.pi_tangle = true;
    else if (item == "survival") m.survival = true;
    else if (item == "all") m = MetricSet::all();
    else throw Error(ErrorKind::InvalidArgument, "unknown metric '" + item + "'");
  }
  return m;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

SweepRow evaluate_row(double tau, double r, const SweepSpec& spec) {
  SweepRow row;
  row.tau = tau;
  row.r = r;
  row.delta = spec.delta;
  try {
    const auto point = rho_w(tau, ReservoirParams::from_ratio(r, spec.delta), spec.schedule);
    if (spec.metrics.survival) row.survival = point.survival;
    if (spec.metrics.svetlichny) {
      const auto t = correlation_tensor(point.rho);
      // Rows may already run in parallel; the optimizer stays single-threaded here.
      row.s_svetlichny = svetlichny_max_serial(t, spec.optimizer).value;
      row.s_bound = upper_bound(t);
    }
    if (spec.metrics.chsh) row.chsh_ab = chsh_max(partial_trace(point.rho, {Qubit::A, Qubit::B}));
    if (spec.metrics.pi_tangle) row.pi_tangle = pi_tangle(point.rho).pi_abc;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) { return run(spec, true); }
std::vector<SweepRow> sweep_serial(const SweepSpec& spec) { return run(spec, false); }

}  // namespace triloc
