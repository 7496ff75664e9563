#pragma once

#include <ostream>

namespace latval {

/// Exit codes: 0 success, 1 a checked claim failed, 2 bad input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latval
