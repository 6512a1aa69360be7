#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adapterchain {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitNoChain = 2,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adapterchain
