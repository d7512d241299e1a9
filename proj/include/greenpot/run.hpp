#ifndef GREENPOT_RUN_HPP
#define GREENPOT_RUN_HPP

#include "greenpot/config.hpp"

#include <iosfwd>

namespace greenpot {

/// Process exit codes of a run.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitViolation = 2 };

/// Executes one experiment. Summaries go to `log`; the main artifact goes to
/// config.output_path when set. Returns kExitViolation when any checked inequality or
/// invariant fails beyond tolerance (or, in strict mode, when a solver did not converge).
int run(const RunConfig& config, std::ostream& log);

}  // namespace greenpot

#endif  // GREENPOT_RUN_HPP
