#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "triloc/svetlichny.hpp"

namespace triloc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  OptimizerConfig optimizer;
  /// Negative control: compute bounds with the wrong matricization.
  bool perturb_bound = false;
  int random_states = 50;
};

/// Golden suite: GHZ-class benchmark rows, W value, trivial states,
/// pi-tangle closed forms, bound dominance on random states.
std::vector<CheckResult> run_golden_suite(const ValidateOptions& opts = {});

nlohmann::json to_json(const std::vector<CheckResult>& checks);

}  // namespace triloc
