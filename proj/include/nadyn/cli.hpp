#pragma once

#include <string>
#include <vector>

namespace nadyn {

struct CliResult {
  int exit_code = 0;
  std::string out;  // JSON on success and on library errors
  std::string err;  // usage and help text
};

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on usage errors, 2 on domain errors.
CliResult run(const std::vector<std::string>& args);

}  // namespace nadyn
