#include "lambertw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lambertw/accuracy.hpp"
#include "lambertw/lambert_w.hpp"
#include "lambertw/physics.hpp"

namespace lambertw::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& text) {
  double v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw UsageError("not a number: '" + text + "'");
  return v;
}

Branch parse_branch(const std::string& text) {
  if (text == "0") return Branch::principal;
  if (text == "-1") return Branch::lower;
  throw UsageError("branch must be 0 or -1, got '" + text + "'");
}

// "[branch] x": a lone value is x, two values are branch then x.
std::pair<Branch, double> branch_and_x(const std::vector<std::string>& values) {
  if (values.size() == 1) return {Branch::principal, parse_real(values[0])};
  if (values.size() == 2) return {parse_branch(values[0]), parse_real(values[1])};
  throw UsageError("expected [branch] x");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real branches of the Lambert W function", "lambert-w"};
  app.usage("lambert-w [branch] x\n       lambert-w <subcommand> ...");
  app.positionals_at_end(false);

  std::vector<std::string> values;
  app.add_option("values", values, "[branch] x; branch is 0 (default) or -1")->expected(0, 2);

  auto* eval_cmd = app.add_subcommand("eval", "W_branch(x) (the default)");
  std::vector<std::string> eval_values;
  eval_cmd->add_option("values", eval_values, "[branch] x")->required()->expected(1, 2);

  auto* approx_cmd = app.add_subcommand("approx", "initial approximation only");
  std::vector<std::string> approx_values;
  approx_cmd->add_option("values", approx_values, "[branch] x")->required()->expected(1, 2);

  auto* sweep_cmd = app.add_subcommand("sweep", "accuracy sweep against the reference solver");
  std::string sweep_branch = "0", sweep_stage = "one-fritsch", sweep_grid, sweep_output;
  sweep_cmd->add_option("--branch", sweep_branch, "0 or -1");
  sweep_cmd->add_option("--stage", sweep_stage,
                        "approximation | one-halley | one-fritsch | converged");
  sweep_cmd->add_option("--grid", sweep_grid, "linear[lo,hi,n] or log[lo,hi,n]")->required();
  sweep_cmd->add_option("--output", sweep_output, "data file (stdout when omitted)");

  auto* moyal_cmd = app.add_subcommand("moyal-inverse", "x with moyal(x) = y");
  std::string moyal_y, moyal_side = "plus";
  moyal_cmd->add_option("y", moyal_y)->required();
  moyal_cmd->add_option("--side", moyal_side, "plus (right of the peak) or minus")
      ->check(CLI::IsMember({"plus", "minus"}));

  auto* gh_cmd = app.add_subcommand("gh-inverse", "both x with g(x; x_max) = y");
  std::string gh_y, gh_xmax;
  gh_cmd->add_option("y", gh_y)->required();
  gh_cmd->add_option("x_max", gh_xmax)->required();

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lambert-w: " << e.what() << '\n' << app.help();
    return kUsageFailure;
  }

  try {
    if (*sweep_cmd) {
      const Branch branch = parse_branch(sweep_branch);
      Stage stage;
      GridSpec grid;
      try {
        stage = parse_stage(sweep_stage);
        grid = parse_grid(sweep_grid);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto report = accuracy_sweep(branch, stage, grid);
      if (sweep_output.empty()) {
        write_accuracy_file(out, report);
      } else {
        std::ofstream file(sweep_output);
        if (!file) throw std::runtime_error("cannot open '" + sweep_output + "'");
        write_accuracy_file(file, report);
      }
      err << "min_delta " << format17(report.min_delta) << '\n';
      return kOk;
    }
    if (*moyal_cmd) {
      const auto side = moyal_side == "plus" ? physics::Side::plus : physics::Side::minus;
      out << format17(physics::moyal_inverse(parse_real(moyal_y), side)) << '\n';
      return kOk;
    }
    if (*gh_cmd) {
      const auto c = physics::gh_inverse(parse_real(gh_y), parse_real(gh_xmax));
      out << format17(c.left) << ' ' << format17(c.right) << '\n';
      return kOk;
    }
    if (*approx_cmd) {
      const auto [branch, x] = branch_and_x(approx_values);
      out << format17(lambert_w_approximation(branch, x)) << '\n';
      return kOk;
    }
    const auto& positional = *eval_cmd ? eval_values : values;
    if (positional.empty()) throw UsageError("missing argument x");
    const auto [branch, x] = branch_and_x(positional);
    out << format17(evaluate(branch, x).value) << '\n';
    return kOk;
  } catch (const UsageError& e) {
    err << "lambert-w: " << e.what() << '\n' << app.help();
    return kUsageFailure;
  } catch (const DomainError& e) {
    err << "lambert-w: domain error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::exception& e) {
    err << "lambert-w: " << e.what() << '\n';
    return kDomainFailure;
  }
}

CliOutcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace lambertw::cli
