#pragma once

#include <iosfwd>

namespace graphbench::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFileError = 2,
  kParseError = 3,
  kValidationFailed = 4,
  kBoundsError = 5,
  kInvalidArgument = 6,
  kCapacityError = 7,
  kIntegrityError = 8,
  kInternalError = 9,
};

/// Runs one subcommand. Normal output goes to `out`, the one-line diagnostic
/// for a failure to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphbench::cli
