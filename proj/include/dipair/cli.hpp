#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dipair::cli {

/// Runs one command. args excludes the program name. Returns the exit
/// status: 0 success, 1 domain error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dipair::cli
