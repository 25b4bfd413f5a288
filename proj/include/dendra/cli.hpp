#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendra::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kSchema = 2 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dendra::cli
