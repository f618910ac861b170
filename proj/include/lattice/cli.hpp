#pragma once

#include <iosfwd>

#include "lattice/oeis.hpp"

namespace lattice::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kResourceGuard = 3,
  kExternalService = 4,
};

/// Runs one command line (argv[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. `transport` backs the `oeis` command; null
/// means the real HTTPS client.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        oeis::Transport* transport = nullptr);

}  // namespace lattice::cli
