#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace teq::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kParseError = 2 };

// Runs `teqt` with argv[0] omitted, e.g. {"check", "plus.teqt", "--effect", "!"}.
// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teq::cli
