#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specialred {

/// Command-line front end. `args` excludes the program name. Returns the
/// process exit code: for `classify`, 0 Special, 1 NotSpecial, 2 Undecided
/// (the maximum over files for a directory), 3 on any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace specialred
