#pragma once

#include <ostream>

namespace rexosc::cli {

/// Entry point of the command-line tool. Returns 0 on success, 1 for invalid input, 2 for a
/// numerical failure and 3 for a singular configuration.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rexosc::cli
