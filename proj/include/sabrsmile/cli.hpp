#pragma once

/**
 * @file cli.hpp
 * @brief Command-line entry point, callable in-process for tests.
 *
 * Subcommands: smile | triangle | density | mc-check | table1. Each writes
 * a CSV or JSON table to --out (default stdout) and diagnostics to stderr.
 * Exit codes: 0 success, 2 config error, 3 numerical failure, 4 MC price
 * out of the no-arbitrage band.
 */

#include <string>
#include <vector>

namespace sabrsmile {

/// Run the tool with argv-style arguments (program name excluded).
int run_cli(const std::vector<std::string>& args);

}  // namespace sabrsmile
