#ifndef PADIC_CLI_HPP_
#define PADIC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kParamsViolation = 2,
  kConstructionFailure = 3,
  kMalformedInput = 4,
  kUsage = 64,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli

#endif  // PADIC_CLI_HPP_
