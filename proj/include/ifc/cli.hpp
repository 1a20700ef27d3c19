#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifc::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,         // bad arguments, parse errors, malformed input files
  kPreconditionError = 2,  // domain/precondition/singularity/solver failures
  kCheckFailed = 3,        // an identity check ran and did not pass
};

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifc::cli
