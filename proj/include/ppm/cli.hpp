#pragma once

#include <string>
#include <vector>

namespace ppm {

struct CliResult {
  int exit_code = 0;  // 0 success / found, 1 not found (match only), 2 usage, input or class error
  std::string out;
  std::string err;
};

/// Runs one invocation; `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace ppm
