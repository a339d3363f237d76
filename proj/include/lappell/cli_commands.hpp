#pragma once

#include <iosfwd>

namespace lappell {

/// Dispatches one CLI invocation. Returns the process exit code:
/// 0 on success, 1 on domain errors (reported as {"error": ...}),
/// 2 on malformed input or unknown flags.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace lappell
