#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace binlcm::cli {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace binlcm::cli
