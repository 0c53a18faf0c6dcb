#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace intgeo {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Runs the tool on argv (without the program name). Documents go to `out`
// unless --out is given; the resolved configuration and diagnostics go to `log`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

}  // namespace intgeo
