#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the command line (without the program name). Primary results go to
/// `out`; timings, warnings and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan
