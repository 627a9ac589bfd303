#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspectral::cli {

/// Exit codes: 0 success, 1 numerical failure, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qspectral::cli
