#pragma once

// The command-line driver behind the `finred` binary, exposed as a library
// function so the test suite can run complete invocations in-process and
// inspect exit codes and output byte for byte.
//
// Exit codes follow the error taxonomy of the core library:
//   0  success
//   2  configuration or input error (bad flags, malformed data, unmet
//      preconditions)
//   3  a configured resource cap was exceeded
//   4  internal invariant violation (always a bug)

#include "finred/basics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace finred::cli {

// Options shared by every subcommand.  The datum string is a builtin name
// ("GL2", "A2-sc", ...), a family name ("GLn", "SLn", "PGLn") whose rank is
// taken from n, or a path to a JSON root-datum file.
struct JobConfig {
  std::string datum = "GL2";
  long n = 0;                   // rank parameter for family names
  Int p = 2;                    // q = p^a
  long a = 1;
  std::string twist = "split";  // "split" or "perm=<comma-separated sigma>"
  std::string mode = "K";       // "K" or "brauer"
  Int ell = 0;                  // coefficient prime; only in brauer mode
  std::string format = "table"; // "table" or "csv"
  std::string cache_dir;        // empty: caching disabled
};

// Throws ValidationError unless p is prime, a >= 1, the mode is known, ell
// is a prime different from p exactly when the mode is brauer, and the
// format is known.
void validate_config(const JobConfig& cfg);

// Runs one full command line (without the program name) against the given
// streams and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace finred::cli
