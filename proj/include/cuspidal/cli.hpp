#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspidal {

/// Exit codes: 0 success, 1 a verification check failed or a command could not finish,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspidal
