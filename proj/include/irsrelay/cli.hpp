// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace irsrelay {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `irsrelay` tool. `args` excludes the program name.
/// Subcommands: fig2, fig3, fig4, sweep, validate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace irsrelay
