#pragma once

#include <ostream>

namespace outerdraw::cli {

/// Parses argv and runs one subcommand. Returns the process exit status:
/// 0 consistent / feasible, 1 inconsistent / infeasible, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace outerdraw::cli
