#pragma once

#include <iosfwd>

#include "intsep/core.hpp"

namespace intsep {

enum class Algo { Fast, Prelim, Brute };

// One-direction solve via the chosen algorithm; the returned configuration
// is the left-possible placement of the produced order.
Solution solve_one_direction(const Instance& inst, Algo algo);

// Full command-line front end (solve / verify / gen / bench). Returns the
// process exit code; `out` receives stdout-bound payloads.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace intsep
