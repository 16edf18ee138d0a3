#pragma once

#include <iosfwd>

namespace isoconst::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRelationFailure = 1,
  kExitComputeError = 2,
  kExitUsage = 64,
};

/// Environment variable that overrides the default worker count.
inline constexpr const char* kWorkersEnv = "ISOCONST_WORKERS";

/// Entry point of the isoconst tool. Machine output goes to `out` unless
/// --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isoconst::cli
