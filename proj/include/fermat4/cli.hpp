#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermat4::cli {

// Runs the command line given by args (program name excluded). Exit code 0:
// success; 1: a verification check failed; 2: usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat4::cli
