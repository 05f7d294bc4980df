#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pascube::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --output redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pascube::cli
