#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gltrace {

/// Command-line entry point. `args` excludes the program name. Returns 0 on
/// success, 1 on invalid input or an unknown subcommand, 2 when a verify
/// suite fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gltrace
