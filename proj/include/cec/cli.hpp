#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cec {

/// Runs the command line with `args` excluding the program name. Returns the
/// process exit status: 0 success, 1 verification mismatch, 2 usage or
/// input error, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cec
