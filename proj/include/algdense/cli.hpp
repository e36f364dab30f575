#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algdense {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes.
enum ExitCode : int { kApplies = 0, kFails = 1, kUndecided = 2, kInputError = 3, kPrecisionFailure = 4 };

/// Runs the command line `args` (without the program name). Results go to `out`,
/// diagnostics to `err`. Nothing is written to `out` when the result is >= 3.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

}  // namespace algdense
