#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace zss::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,     // zero-sum square found, counterexample, failed verification
  kUsage = 2,        // bad arguments or unparsable input
  kEnvironment = 3,  // solver or filesystem trouble, failed integrity checks
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, Streams io, const EnvLookup& env = process_env);

}  // namespace zss::cli
