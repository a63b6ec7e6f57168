#ifndef OREDANGO_CLI_HPP
#define OREDANGO_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace oredango::cli {

/// Process exit codes.
enum ExitStatus : int {
    kSuccess = 0,   // solved / valid / PASS
    kNegative = 1,  // UNSAT / violations / NONE / FAIL
    kUsage = 2,     // bad arguments, unreadable or malformed input
};

/// Runs one command line (without the program name). The declared artifact
/// goes to `out`; diagnostics, usage text and timings go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oredango::cli

#endif  // OREDANGO_CLI_HPP
