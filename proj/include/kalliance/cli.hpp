#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kalliance::cli {

enum ExitStatus { ok = 0, negative = 1, usage = 2 };

// args[0] is the program name. Returns 0 on success or a true verdict, 1 on
// a false verdict or failed audit, 2 on usage, parse or capacity errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kalliance::cli
