#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnmm::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1; // property violation, rejection, unreachable pair
inline constexpr int exit_usage = 2;     // bad flags, unreadable or malformed input, cap exceeded

// Machine-readable output of every command carries "schema": cli_schema.
inline constexpr const char* cli_schema = "bnmm.cli.v1";

// args[0] is the program name. Output is buffered and written to `out`
// once the command has finished; diagnostics go to `err`.
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace bnmm::cli
