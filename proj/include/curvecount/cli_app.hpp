#ifndef CURVECOUNT_CLI_APP_HPP
#define CURVECOUNT_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace curvecount {

/// Runs the command-line front end. Exit status 0 iff every assertion in the
/// run passed; parse errors and computation errors are nonzero.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace curvecount

#endif
