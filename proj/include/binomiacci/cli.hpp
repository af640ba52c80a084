#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binomiacci {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitSuccess = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Largest table / series extent accepted without --force.
inline constexpr long long kGuardLimit = 10000;

/// Runs `binomiacci <table|triangle|series|asympt|verify> [flags]`.
/// args excludes the program name. Normal output goes to out unless --out is
/// given; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binomiacci
