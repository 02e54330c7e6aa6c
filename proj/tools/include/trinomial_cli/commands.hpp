#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trinomial::cli {

/// Parses `args` (without the program name) and runs the selected verb:
/// row, central, diag, crosscheck, gf, quad, identity or bench.
///
/// Returns 0 on success, 1 when a check fails or a quadrature does not
/// converge, and 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trinomial::cli
