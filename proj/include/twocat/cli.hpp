#pragma once

#include <iosfwd>

// Command-line entry point shared by the twocat tool and its tests.
namespace twocat::cli {

enum ExitCode : int {
  ok = 0,
  io_error = 1,
  parse_error = 2,
  type_error = 3,
  law_failure = 4,
};

/// Subcommands: compose, check-laws, demo-example, dnc-matmul.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twocat::cli
