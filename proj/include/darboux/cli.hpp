#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace darboux::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,      // bad flags or parameters
  kNumerical = 2,  // degeneracy, transform through infinity, solver failure
  kIo = 3,         // unreadable, unwritable or invalid curve files
};

/// Runs one command line (without the program name). Diagnostics go to `out`
/// as a single JSON object, messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darboux::cli
