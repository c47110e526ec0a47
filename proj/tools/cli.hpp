#pragma once

namespace purejump::cli {

// Dispatches one subcommand (simulate / test / mc / preavg / analyze).
// Returns the process exit status: 0 on success, nonzero on operational
// failure. Statistical decisions are data, never exit codes.
int run(int argc, const char* const* argv);

}  // namespace purejump::cli
