#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      // bad flags, malformed files, infeasible parameters
  kCorrupt = 3,    // a decoder rejected its input
  kViolation = 4,  // constraint violation or formula/oracle mismatch found
  kBudget = 5,     // enumeration refused
};

/// Runs the command line `args` (without the program name). Unset --in/--out
/// fall back to `in` and `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lpa::cli
