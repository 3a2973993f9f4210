#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gframe::cli {

/// Process exit codes. The mapping is exhaustive: every failure path of every
/// command returns one of these.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,     ///< unreadable, malformed or inconsistent input; bad --tol
  kExitBasisNotOnb = 3,      ///< the basis argument fails the orthonormal-basis check
  kExitSplitPrecondition = 4,  ///< the frame is not in the class the split kind requires
  kExitEquivalenceMismatch = 5,  ///< induced c-frame and g-frame certificates disagree
  kExitUsage = 64,           ///< unknown flag, missing argument, bad option value
};

/// Entry point behind the `gframe` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* tool_version();

}  // namespace gframe::cli
