#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ridge/orientation.hpp"

namespace ridge::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kInternalError = 3,
};

/// Runs one command line (args excludes the program name). Diagnostics go
/// to `err`, reports to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// kSuccess when the two fields are identical, otherwise kInternalError with
/// the first differing block written to `err`.
int check_equivalence(const BlockDirectionImage& pipeline, const BlockDirectionImage& direct, std::ostream& err);

} // namespace ridge::cli
