#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normplane::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation error, failed check, exact/float mismatch
inline constexpr int kExitUsage = 2;    // invalid input

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normplane::cli
