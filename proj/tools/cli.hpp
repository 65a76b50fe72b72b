#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fekete::cli {

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 on usage or input errors, 2 when a verify run
/// finds a soundness violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fekete::cli
