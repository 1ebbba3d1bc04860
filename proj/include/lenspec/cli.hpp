#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenspec::cli {

/// Runs one CLI invocation. `args` excludes the program name. Structured
/// output goes to `out`, diagnostics to `err`. Returns the process exit
/// code: 0 success, 1 fixture failure (verify-paper), 2 flag/parameter
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lenspec::cli
