#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sig::cli {

// Runs one sigtool invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 negative verdict, 2 usage, parse or domain error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sig::cli
