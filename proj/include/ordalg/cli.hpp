#pragma once

// The ordalg command-line front end.
//
// Exit codes: 0 success, 1 a check failed (one machine-readable FAIL line on
// stdout, prose on stderr), 2 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace ordalg::cli {

inline constexpr int kExitOk      = 0;
inline constexpr int kExitFailed  = 1;
inline constexpr int kExitUsage   = 2;

/// Runs one invocation; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace ordalg::cli
