#include "lambertw/accuracy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lambertw/lambert_w.hpp"
#include "lambertw/oracle.hpp"

namespace lambertw {

namespace {

std::string full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

AccuracySample sample_at(Branch branch, Stage stage, double x) {
  const double exact = reference_w(branch, x);
  const double approx = evaluate_stage(branch, stage, x);
  return {x, delta_accuracy(approx, exact), region_for(branch, x)};
}

}  // namespace

double delta_accuracy(double approx, double exact) {
  if (exact == 0) throw DomainError("delta_accuracy: undefined for exact == 0");
  if (approx == exact) return kDeltaCap;
  const double d = std::log10(std::fabs(exact)) - std::log10(std::fabs(approx - exact));
  return std::fmin(d, kDeltaCap);
}

std::vector<double> GridSpec::points() const {
  if (count < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lower;
    return out;
  }
  const double n = count - 1;
  if (kind == GridKind::linear) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lower + (upper - lower) * (i / n);
  } else {
    if (!(lower * upper > 0)) throw std::invalid_argument("log grid bounds must share sign");
    const double sign = lower < 0 ? -1.0 : 1.0;
    const double a = std::log(std::fabs(lower));
    const double b = std::log(std::fabs(upper));
    for (int i = 0; i < count; ++i)
      out[static_cast<std::size_t>(i)] = sign * std::exp(a + (b - a) * (i / n));
  }
  out.front() = lower;
  out.back() = upper;
  return out;
}

std::string GridSpec::describe() const {
  return std::string(kind == GridKind::linear ? "linear" : "log") + "[" + full(lower) + "," +
         full(upper) + "," + std::to_string(count) + "]";
}

GridSpec parse_grid(std::string_view text) {
  const auto open = text.find('[');
  if (open == std::string_view::npos || text.back() != ']')
    throw std::invalid_argument("grid must look like linear[lo,hi,n] or log[lo,hi,n]");
  GridSpec g;
  const auto kind = text.substr(0, open);
  if (kind == "linear")
    g.kind = GridKind::linear;
  else if (kind == "log")
    g.kind = GridKind::log;
  else
    throw std::invalid_argument("unknown grid kind '" + std::string(kind) + "'");

  std::string body(text.substr(open + 1, text.size() - open - 2));
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  in >> g.lower >> g.upper >> g.count;
  std::string rest;
  if (in.fail() || (in >> rest) || g.count < 1)
    throw std::invalid_argument("malformed grid '" + std::string(text) + "'");
  if (g.kind == GridKind::log && !(g.lower * g.upper > 0))
    throw std::invalid_argument("log grid bounds must share sign");
  return g;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::approximation: return "approximation";
    case Stage::one_halley: return "one-halley";
    case Stage::one_fritsch: return "one-fritsch";
    case Stage::converged: return "converged";
  }
  return "unknown";
}

Stage parse_stage(std::string_view text) {
  for (Stage s : {Stage::approximation, Stage::one_halley, Stage::one_fritsch, Stage::converged})
    if (text == to_string(s)) return s;
  throw std::invalid_argument("unknown stage '" + std::string(text) + "'");
}

double evaluate_stage(Branch branch, Stage stage, double x) {
  switch (stage) {
    case Stage::approximation:
      return lambert_w_approximation(branch, x);
    case Stage::one_halley:
      return evaluate(branch, x, {Scheme::halley, 1, 0}).value;
    case Stage::one_fritsch:
      return evaluate(branch, x, {Scheme::fritsch, 1, 0}).value;
    case Stage::converged:
      return evaluate(branch, x).value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

AccuracyReport accuracy_sweep(Branch branch, Stage stage, const GridSpec& grid,
                              Execution execution) {
  std::vector<double> xs = grid.points();
  xs.erase(std::remove(xs.begin(), xs.end(), 0.0), xs.end());

  const auto n = static_cast<long>(xs.size());
  std::vector<AccuracySample> samples(xs.size());
  std::vector<std::optional<std::string>> errors(xs.size());

  auto work = [&](long i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      samples[k] = sample_at(branch, stage, xs[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  };

  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) work(i);
  } else {
    for (long i = 0; i < n; ++i) work(i);
  }

  for (std::size_t k = 0; k < errors.size(); ++k)
    if (errors[k]) throw DomainError("accuracy_sweep at x = " + full(xs[k]) + ": " + *errors[k]);

  double min_delta = kDeltaCap;
  for (const auto& s : samples) min_delta = std::fmin(min_delta, s.delta);
  return {branch, stage, grid, std::move(samples), min_delta};
}

void write_accuracy_file(std::ostream& out, const AccuracyReport& report) {
  out << "# branch=" << to_string(report.branch) << " stage=" << to_string(report.stage)
      << " grid=" << report.grid.describe() << " min_delta=" << full(report.min_delta) << '\n';
  for (const auto& s : report.samples)
    out << full(s.x) << ' ' << full(s.delta) << ' ' << to_string(s.region) << '\n';
}

}  // namespace lambertw
