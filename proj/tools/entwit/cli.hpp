#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entwit::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

// Runs one subcommand. `args` excludes the program name. The JSON report goes
// to `out`; help text also goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entwit::cli
