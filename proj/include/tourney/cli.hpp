#pragma once

#include <string>
#include <vector>

namespace tourney::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;     // feasibility was required
inline constexpr int kExitUsage = 2;          // unparseable invocation
inline constexpr int kExitDisagreement = 3;   // counting methods disagree
inline constexpr int kExitVerifyFailed = 4;   // a verification check failed

struct CliResult {
    int exit_code = kExitOk;
    std::string output;  // stdout payload
    std::string error;   // stderr diagnostics
};

// Runs one invocation, `args` excluding the program name. Pure: nothing is
// printed, all output is returned, identical inputs give identical bytes.
CliResult run(const std::vector<std::string>& args);

// main() adapter: runs, prints, returns the exit code.
int run_main(int argc, char** argv);

}  // namespace tourney::cli
