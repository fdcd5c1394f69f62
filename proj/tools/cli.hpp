#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace stackopt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kRuntimeError = 2,
};

// Entry point shared by the binary and the in-process tests. `args`
// excludes the program name.
int run(std::span<std::string const> args, std::ostream& out, std::ostream& err);

} // namespace stackopt::cli
