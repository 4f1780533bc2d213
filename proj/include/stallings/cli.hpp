#ifndef STALLINGS_CLI_HPP
#define STALLINGS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stallings::cli {

// Dispatches one command-line invocation (arguments without the program
// name). Exit codes: 0 success / true, 1 semantic false (non-membership,
// failed verification), 2 usage, parse or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stallings::cli

#endif  // STALLINGS_CLI_HPP
