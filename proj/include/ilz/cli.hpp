#pragma once

namespace ilz {

/// Parses and executes one CLI invocation. Returns the process exit code:
/// 0 on success, 2 on usage errors, 1 on computation errors (the error name
/// goes to stderr).
int run_cli(int argc, char** argv);

}  // namespace ilz
