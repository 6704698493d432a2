#pragma once

#include <iosfwd>

namespace bidleak {

enum ExitCode : int
{
  kExitOk       = 0,
  kExitUsage    = 1,
  kExitDomain   = 2,
  kExitResource = 3,
  kExitMismatch = 4,
};

/// Entry point of the `bidleak` command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bidleak
