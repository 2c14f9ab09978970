#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebcube {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitInvalidArguments = 2,
  kExitNumericalFailure = 3,
};

/// Entry point of the `chebcube` tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace chebcube
