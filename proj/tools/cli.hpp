#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoprop::cli {

/// Parses and executes one command line (without the program name).
/// Exit codes: 0 success / relation holds, 1 relation fails (decide-style
/// commands), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace monoprop::cli
