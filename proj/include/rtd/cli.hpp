#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtd::cli {

enum ExitCode : int { ok = 0, usage_error = 2, refused = 3 };

// Runs the command line; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace rtd::cli
