#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsi {

/// Exit statuses of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_capacity = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsi
