#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isodouble::cli {

/// Exit codes: 0 pass, 1 verified failure or inapplicable query, 2 usage.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isodouble::cli
