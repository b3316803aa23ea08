// Command-line entry point, exposed as a function so tests can drive it.
// Exit codes: 0 success, 1 usage or runtime error, 2 a requested check
// failed (bound or identity violation). Diagnostics go to stderr as JSON
// lines.
#pragma once

#include <string>
#include <vector>

namespace pasecdeg::cli {

int run(const std::vector<std::string>& args);

} // namespace pasecdeg::cli
