#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meander::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Environment variable holding the default size cap for every subcommand.
inline constexpr char const *cap_environment_variable = "MEANDER_MAX_ORDER";

/// Runs one command line. args excludes the program name. Data goes to
/// out (or the --output file), diagnostics to err. Returns 0 on success,
/// 1 when a verification finds a mismatch, 2 on bad usage or input.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace meander::cli
