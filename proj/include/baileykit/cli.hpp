#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baileykit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitError = 3 };

/// Runs one command line (without the program name) and returns its exit code.
/// Commands: list, verify, verify-all, coeffs, report.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baileykit
