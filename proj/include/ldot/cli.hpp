#pragma once

#include <ostream>

namespace ldot::cli {

/// Exit codes of the `ldot` tool.
enum Exit : int { ok = 0, usage = 1, counterexample = 2 };

/// Runs one `ldot` invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ldot::cli
