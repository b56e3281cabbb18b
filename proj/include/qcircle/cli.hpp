#pragma once

#include <iosfwd>

namespace qcircle::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadState = 3;

// Entry point of the `qcircle` tool. Machine-readable output (JSON, CSV,
// state records) goes to `out`; human diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcircle::cli
