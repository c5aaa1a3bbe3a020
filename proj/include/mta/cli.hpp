#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mta::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 2,
  kConfigError = 3,
  kDegenerateSeries = 4,
};

/// Entry point shared by the `mta` binary and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mta::cli
