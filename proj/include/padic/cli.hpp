#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args[0] is the program name. Results go to out,
/// diagnostics to err. Returns 0 on success, 1 when `verify` finds a
/// counterexample, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace padic::cli
