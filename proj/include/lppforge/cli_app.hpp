#ifndef LPPFORGE_CLI_APP_HPP
#define LPPFORGE_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lppforge {

/// Run the command-line interface on the given arguments (program name
/// excluded). Returns the process exit code. Factored out of main() so tests
/// can drive it directly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lppforge

#endif
