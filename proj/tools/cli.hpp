#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tarzan::cli {

enum ExitCode { ok = 0, failure = 1, limit = 2 };

/// Runs one command line (args excludes the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tarzan::cli
