#pragma once

#include <ostream>

namespace quasichar::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceError = 3,
  kIntegrityError = 4,
  kInternalError = 5,
};

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quasichar::cli
