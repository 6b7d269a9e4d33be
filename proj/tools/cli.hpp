#ifndef NORMCURVE_TOOLS_CLI_HPP
#define NORMCURVE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace normcurve::cli {

/// Runs one CLI invocation (argv without the program name) writing to the
/// given streams. Exit codes: 0 success, 2 domain error, 3 parse/usage
/// error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normcurve::cli

#endif
