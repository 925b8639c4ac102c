#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftchaos {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command line (without the program name). Returns the exit code:
/// 0 for PASS or INFO, 1 for FAIL, 2 for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftchaos
