#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knowforge::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kFailure = 1,  // error diagnostics, parse errors, failed generation
  kUsage = 2,    // bad flags, unknown targets, unreadable input
};

// Runs the knowforge command line. `args` excludes the program name.
// Machine-readable results go to `out`, diagnostics and logs to `err`.
//
//   knowforge parse <file>
//   knowforge validate <file> [--base IRI]
//   knowforge generate <file> [--base IRI] --target TOKEN... --out DIR
//   knowforge targets
//
// Profiles come from $KNOWFORGE_PROFILES when set, else the bundled set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knowforge::cli
