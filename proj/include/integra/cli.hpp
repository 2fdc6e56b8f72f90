#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace integra::cli {

/// Runs one command; args excludes the program name. Returns the exit code:
/// 0 verified, 1 refuted, 2 verified modulo membership (or unknown), 3 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace integra::cli
