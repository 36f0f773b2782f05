#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gconv::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, guard = 3 };

// args excludes the program name. Graphs come from --graph or `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gconv::cli
