#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace humbert {

/// Command-line front end; returns the process exit code:
/// 0 = success and all requested thresholds met, 1 = evaluation failure,
/// 2 = usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace humbert
