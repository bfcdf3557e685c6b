#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrc/error.hpp"

namespace lrc::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidConfig = 2,
    kConstructionError = 3,
    kVerificationFailure = 4,
    kBudgetExceeded = 5,
};

int exit_code_for(ErrorCode code);

/// Parses "key=value" lines; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrc::cli
