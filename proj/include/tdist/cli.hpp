#ifndef TDIST_CLI_HPP
#define TDIST_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tdist {

/// Command-line front end. Exit status: 0 success, 1 verification-negative
/// result (a labeling that is not distinguishing, or a construction that
/// failed its verification), 2 usage or input errors, 3 budget exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdist

#endif
