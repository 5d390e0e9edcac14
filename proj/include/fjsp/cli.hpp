#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fjsp::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,         ///< success; for solve/evaluate the schedule is feasible
    kError = 1,      ///< unreadable or invalid input, bad flags
    kInfeasible = 2, ///< solve/evaluate produced or received an infeasible schedule
    kTooLarge = 3,   ///< oracle refused: search space above --limit
};

/// Runs one command line (args[0] is the program name). Results go to `out`
/// as `key=value` lines; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Worker cap from FJSP_THREADS (unset or 0 = auto). Throws on garbage.
int threads_from_env();

} // namespace fjsp::cli
