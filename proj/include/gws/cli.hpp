#pragma once

#include <string>
#include <vector>

namespace gws {

// Full CLI entry point. Returns the process exit code:
//   0 success, 2 config/usage error, 3 physics error, 4 internal error.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace gws
