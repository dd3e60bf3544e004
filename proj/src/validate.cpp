#include "triloc/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "triloc/entanglement.hpp"
#include "triloc/presets.hpp"
#include "triloc/random_state.hpp"
#include "triloc/report.hpp"

namespace triloc {
namespace {

CheckResult near(std::string name, double got, double want, double tol) {
  std::ostringstream os;
  os << "got " << format_number(got) << ", expected " << format_number(want) << " +/- " << tol;
  return {std::move(name), std::abs(got - want) <= tol, os.str()};
}

}  // namespace

std::vector<CheckResult> run_golden_suite(const ValidateOptions& opts) {
  std::vector<CheckResult> out;
  const auto matricization = opts.perturb_bound ? Matricization::ThirdParty : Matricization::FirstParty;

  for (const auto& row : table1_rows()) {
    const auto t = correlation_tensor(ghz_class(row.p, row.theta, row.theta3));
    const double s = svetlichny_max(t, opts.optimizer).value;
    const double bound = upper_bound(t, matricization);
    out.push_back(near("table1 bound [" + row.label + "]", bound, row.reference_bound, 1e-3));
    if (row.reference_bound - row.reference_s > 1e-3) {
      // Reference S sits below a tight bound here: require at least the
      // reference value and never more than the bound.
      std::ostringstream os;
      os << "got " << format_number(s) << ", need >= " << row.reference_s - 5e-3 << " and <= bound " << format_number(bound);
      out.push_back({"table1 S [" + row.label + "]", s >= row.reference_s - 5e-3 && s <= bound + 1e-6, os.str()});
    } else {
      out.push_back(near("table1 S [" + row.label + "]", s, row.reference_s, 5e-3));
    }
  }

  out.push_back(near("W state Svetlichny value", svetlichny_max(w_state(), opts.optimizer).value, 4.35, 0.01));
  const auto mixed = ghz_class(0.0, 0.0, 0.0);
  out.push_back(near("maximally mixed Svetlichny value", svetlichny_max(mixed, opts.optimizer).value, 0.0, 1e-9));
  out.push_back(near("maximally mixed bound", upper_bound(correlation_tensor(mixed), matricization), 0.0, 1e-12));
  out.push_back(near("product state Svetlichny value", svetlichny_max(ground_state(), opts.optimizer).value, 4.0, 1e-6));
  out.push_back(near("product state pi-tangle", pi_tangle(ground_state()).pi_abc, 0.0, 1e-10));
  out.push_back(near("W pi-tangle", pi_tangle(w_state()).pi_abc, 4.0 * (std::sqrt(5.0) - 1.0) / 9.0, 1e-9));
  out.push_back(near("GHZ pi-tangle", pi_tangle(ghz_class(1.0, std::acos(-1.0) / 4, std::acos(-1.0) / 2)).pi_abc, 1.0, 1e-9));
  out.push_back(near("W pairwise CHSH", chsh_max(partial_trace(w_state(), {Qubit::A, Qubit::B})), 4.0 * std::sqrt(2.0) / 3.0, 1e-12));

  std::mt19937_64 rng(opts.optimizer.seed);
  int violations = 0;
  double worst = -1e300;
  for (int i = 0; i < opts.random_states; ++i) {
    const auto t = correlation_tensor(random_density_matrix(rng, 8, i % 4 == 0 ? 1 : 0));
    const double gap = svetlichny_max(t, opts.optimizer).value - upper_bound(t, matricization);
    worst = std::max(worst, gap);
    violations += gap > 1e-6;
  }
  std::ostringstream os;
  os << violations << " of " << opts.random_states << " random states exceed the bound; max(S - bound) = " << format_number(worst);
  out.push_back({"bound dominance on random states", violations == 0, os.str()});
  return out;
}

nlohmann::json to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  int failed = 0;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    failed += !c.passed;
  }
  return {{"checks", arr}, {"total", checks.size()}, {"failed", failed}, {"passed", failed == 0}};
}

}  // namespace triloc
