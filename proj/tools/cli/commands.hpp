#pragma once

#include <iosfwd>

namespace astau::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_selftest_failed = 1,
  exit_argument_error = 2,
  exit_numerical_failure = 3,
};

/// Full command line entry point; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace astau::cli
