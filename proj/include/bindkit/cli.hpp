#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bindkit::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code: 0 on success or a
/// `true` answer, 1 on a `false` answer, 2 on usage, parse, scope or type
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bindkit::cli
