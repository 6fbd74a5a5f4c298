#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hj::cli {

/// Exit codes: 0 success or verified, 1 a counterexample or `false` verdict
/// was found, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hj::cli
