#pragma once

#include <iosfwd>

namespace pairdom::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kWrongClass = 3,
  kBudget = 4,
  kVerifyFailed = 5,
};

/// Entry point for `pairdom`; writes reports to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace pairdom::cli
