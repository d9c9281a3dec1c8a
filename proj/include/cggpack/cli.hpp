#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cggpack {

/// Command-line entry point, factored out of main() so tests can drive the
/// full surface in-process. Exit codes: 0 success, 2 precondition or route
/// error, 3 verification failure, 4 parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cggpack
