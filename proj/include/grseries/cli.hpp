#pragma once

#include <string>
#include <vector>

namespace grseries {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success, 1 identity failure, 2 input error.
int run_cli(const std::vector<std::string>& args);

}  // namespace grseries
