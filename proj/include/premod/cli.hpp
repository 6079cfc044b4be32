#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace premod {

/// The `premod` command line, minus the program name. Returns the exit code:
/// 0 success, 1 internal cross-check failure or inconsistent verdict, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace premod
