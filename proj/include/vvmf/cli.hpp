#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vvmf {

// Full command-line surface; returns the process exit code.
// 0 success, 1 domain error or fixture mismatch, 2 usage error,
// 3 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vvmf
