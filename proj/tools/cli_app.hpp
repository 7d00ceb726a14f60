#pragma once

#include <iosfwd>

namespace grouptest::cli {

/// Full command dispatch. Results go to `out`, progress and errors to `err`.
/// Exit codes: 0 success (an infinite answer is an answer), 1 usage error,
/// 2 verification failure or cache conflict, 3 budget exhaustion.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grouptest::cli
