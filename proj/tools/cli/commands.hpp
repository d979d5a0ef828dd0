#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbc::cli {

enum ExitCode : int {
  kOk = 0,
  kFalsified = 1,
  kUndecided = 2,
  kUsage = 64,
  kDataError = 65,
  kIoError = 74,
};

/// Runs one command line.  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace fbc::cli
