#pragma once

#include <iosfwd>

namespace tspec::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kBadInput = 2, kCapExceeded = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tspec::cli
