#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // precondition, bound or verification failure
inline constexpr int kExitUsage = 2;    // bad arguments, unknown names, malformed input files

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgm::cli
