#pragma once

#include <string>
#include <vector>

namespace gkm::cli {

struct RunResult {
  int exitCode = 0;
  std::string out;
  std::string err;
};

/// Runs one invocation. args excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
RunResult run(const std::vector<std::string>& args);

}  // namespace gkm::cli
