#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umet::cli {

/// Runs one subcommand against the given streams. Exit codes: 0 for
/// success/accept, 1 for reject/absence, 2 for usage or parse errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace umet::cli
