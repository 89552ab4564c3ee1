#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlosc {

/// Entry point of the command-line tool. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`. Returns 0 on success, 2 for
/// usage or configuration errors and 1 when a solve fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Oracle step count: NLOSC_ORACLE_STEPS if set to a positive integer,
/// otherwise the built-in default.
int oracle_steps_from_env();

}  // namespace nlosc
