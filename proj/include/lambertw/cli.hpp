#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambertw::cli {

/// Exit codes of the lambert-w utility.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageFailure = 2;

/// Runs the utility on `args` (program name excluded).
///
///   lambert-w [branch] x                 W_branch(x), branch 0 by default
///   lambert-w eval [branch] x            same as above
///   lambert-w approx [branch] x          initial approximation only
///   lambert-w sweep --branch B --stage S --grid G [--output FILE]
///   lambert-w moyal-inverse y [--side plus|minus]
///   lambert-w gh-inverse y x_max
///
/// Values go to `out` with 17 significant digits; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CliOutcome {
  int exit_code;
  std::string out;
  std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args);

}  // namespace lambertw::cli
