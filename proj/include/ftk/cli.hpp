// Command-line front end. One binary, subcommand style; every output
// file gets a JSON manifest sidecar sufficient to reproduce it.

#ifndef FTK_CLI_HPP
#define FTK_CLI_HPP

#include <string>
#include <vector>

namespace ftk {

/// Entry point used by the ftk binary and by the CLI tests. Returns the
/// process exit code: 0 on success, 1 for usage or input errors, 2 when
/// a run aborts on divergence or degenerate input.
int run_cli(const std::vector<std::string>& args);

/// "pi/9", "2pi/5", "0.25pi", "-pi", or a plain number -> radians.
double parse_angle(const std::string& text);

} // namespace ftk

#endif
