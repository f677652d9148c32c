#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nhodge::cli {

// Exit codes of the nhodge tool.
enum ExitCode : int {
  Ok = 0,
  Usage = 1,       // bad flags, unreadable files
  BadInput = 2,    // syntax, negative exponent, unknown variable, empty support
  Degenerate = 3,  // dim P < n
  BadLambda = 4,   // eigenvalue in R_f
  Internal = 5,    // failed internal check or selfcheck
};

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nhodge::cli
