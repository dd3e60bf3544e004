#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triloc::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kBadInput = 2,
  kUnknownPreset = 3,
};

/// Parses "pi/3", "-2pi/3", "2*pi/3", "pi", or plain radians ("0.6216").
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triloc::cli
