#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropfan {

/// Runs one command line (without the program name). Exit codes: 0 pass,
/// 1 checked failure or not certified, 2 input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropfan
