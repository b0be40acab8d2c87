// Command-line front end. Subcommands: spectrum, wavefunction, figure1,
// verify, limits. Data goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 usage or argument error, 2 solver structural
// failure, 3 verification bound exceeded.

#ifndef PTWELL_CLI_HPP
#define PTWELL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ptwell {

inline constexpr const char* version = "1.0.0";

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_solver = 2,
  exit_verification = 3,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1.5", "pi", "4pi", "4*pi", "pi/500", "2*pi/1000".
double parse_length(const std::string& text);

/// Sign changes of lhs - rhs located by linear interpolation in omega.
std::vector<double> interpolated_crossings(const std::vector<double>& omega,
                                           const std::vector<double>& lhs,
                                           const std::vector<double>& rhs);

}  // namespace ptwell

#endif  // PTWELL_CLI_HPP
