#include "lambertw/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include <omp.h>

#include "lambertw/lambert_w.hpp"

namespace lambertw::bench {

namespace {

using Clock = std::chrono::steady_clock;
using Evaluator = double (*)(Branch, double, Scheme);

// Relative perturbations applied in turn to consecutive calls. Scaled
// towards x = 0, which stays inside the domain on both branches.
constexpr std::array<double, 16> kPerturbation = [] {
  std::array<double, 16> f{};
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = static_cast<double>(k) * 0x1p-46;
  return f;
}();

[[gnu::noinline]] double identity(Branch, double x, Scheme) { return x; }

double perturbed(double x, long k) {
  const double f = kPerturbation[static_cast<std::size_t>(k) & 15];
  return x > 0 ? x * (1 + f) : x * (1 - f);
}

double call_loop(Evaluator fn, Branch branch, double x, Scheme scheme, long calls) {
  double sum = 0;
  for (long k = 0; k < calls; ++k) sum += fn(branch, perturbed(x, k), scheme);
  return sum;
}

Nanoseconds timed_loop(Evaluator fn, Branch branch, double x, Scheme scheme, long calls,
                       double& sum) {
  const auto t0 = Clock::now();
  sum = call_loop(fn, branch, x, scheme, calls);
  const auto t1 = Clock::now();
  return t1 - t0;
}

Nanoseconds median(std::vector<Nanoseconds> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

Nanoseconds net(Nanoseconds total, Nanoseconds overhead, long calls) {
  const auto d = (total - overhead) / static_cast<double>(calls);
  return d.count() > 0 ? d : Nanoseconds{0};
}

std::string format(double v, const char* fmt = "%.17g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

double solve(Branch branch, double x, Scheme scheme) {
  return evaluate(branch, x, {scheme, 1, 7}).value;
}

int steps_to_converge(Branch branch, double x, Scheme scheme) {
  if (std::fabs(x - constants::kBranchPointX) <= constants::kBranchPointSlack) return 0;
  if (branch == Branch::principal && x == 0) return 0;
  const double w0 = lambert_w_approximation(branch, x);
  try {
    const auto trace = iterate(x, w0, scheme, 1e-14, 8);
    return static_cast<int>(trace.steps.size()) + (trace.converged ? 0 : 1);
  } catch (const SingularityError&) {
    return 0;  // seed is already at -1
  }
}

const SchemeSummary* BenchReport::find(Scheme scheme) const {
  for (const auto& s : schemes)
    if (s.scheme == scheme) return &s;
  return nullptr;
}

double untimed_checksum(Branch branch, const std::vector<double>& xs, Scheme scheme,
                        long calls_per_point) {
  double total = 0;
  for (double x : xs) total += call_loop(&solve, branch, x, scheme, calls_per_point);
  return total;
}

BenchReport run_benchmark(Branch branch, const GridSpec& grid, const std::vector<Scheme>& schemes,
                          const BenchOptions& options) {
  if (options.calls_per_point < kMinCallsPerPoint)
    throw std::invalid_argument("run_benchmark: calls_per_point must be >= 10000");
  if (options.repetitions < 5) throw std::invalid_argument("run_benchmark: need >= 5 repetitions");

  std::vector<double> xs = grid.points();
  const long calls = options.calls_per_point;
  const auto reps = static_cast<std::size_t>(options.repetitions);
  const std::size_t npts = xs.size();

  // Identity baseline, per point, per repetition.
  std::vector<std::vector<Nanoseconds>> id_times(npts, std::vector<Nanoseconds>(reps));
  double id_checksum = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    double total = 0;
    for (std::size_t p = 0; p < npts; ++p) {
      double sum = 0;
      id_times[p][r] = timed_loop(&identity, branch, xs[p], Scheme::fritsch, calls, sum);
      total += sum;
    }
    id_checksum = total;
  }
  std::vector<Nanoseconds> id_median(npts);
  for (std::size_t p = 0; p < npts; ++p) id_median[p] = median(id_times[p]);

  BenchReport report{branch, grid, options.repetitions, {}, {}, {}, {}};
  report.identity.calls = calls * static_cast<long>(npts);
  report.identity.checksum = id_checksum;
  for (std::size_t p = 0; p < npts; ++p) {
    report.identity.total += id_median[p];
    report.identity.overhead += id_median[p];
  }

  for (Scheme scheme : schemes) {
    std::vector<std::vector<Nanoseconds>> times(npts, std::vector<Nanoseconds>(reps));
    std::vector<double> checksums(reps);
    std::vector<Nanoseconds> rep_totals(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      double total = 0;
      for (std::size_t p = 0; p < npts; ++p) {
        double sum = 0;
        times[p][r] = timed_loop(&solve, branch, xs[p], scheme, calls, sum);
        rep_totals[r] += times[p][r];
        total += sum;
      }
      checksums[r] = total;
    }

    SchemeSummary summary{scheme, {}, 0, 0, 0, true};
    summary.timing.calls = calls * static_cast<long>(npts);
    summary.timing.checksum = checksums.front();
    const double reference = untimed_checksum(branch, xs, scheme, calls);
    for (double c : checksums) summary.checksum_stable &= (c == reference);
    const auto [lo, hi] = std::minmax_element(rep_totals.begin(), rep_totals.end());
    summary.timing.spread = *hi - *lo;

    std::map<RegionKind, RegionTiming> by_region;
    for (std::size_t p = 0; p < npts; ++p) {
      const Nanoseconds t = median(times[p]);
      const int steps = steps_to_converge(branch, xs[p], scheme);
      summary.timing.total += t;
      summary.timing.overhead += id_median[p];
      summary.total_steps += steps;
      summary.max_steps = std::max(summary.max_steps, steps);
      if (steps > 1) ++summary.points_needing_extra_steps;
      report.points.push_back({xs[p], scheme, net(t, id_median[p], calls), steps});

      const RegionKind region = region_for(branch, xs[p]);
      auto [it, inserted] = by_region.try_emplace(region, RegionTiming{scheme, region, {}, 0});
      it->second.timing.calls += calls;
      it->second.timing.total += t;
      it->second.timing.overhead += id_median[p];
      it->second.total_steps += steps;
    }
    summary.timing.net_per_call =
        net(summary.timing.total, summary.timing.overhead, summary.timing.calls);
    for (auto& [region, rt] : by_region) {
      rt.timing.net_per_call = net(rt.timing.total, rt.timing.overhead, rt.timing.calls);
      report.regions.push_back(rt);
    }
    report.schemes.push_back(summary);
  }
  report.identity.net_per_call = Nanoseconds{0};
  return report;
}

void write_report(std::ostream& out, const BenchReport& report) {
  out << "# branch=" << to_string(report.branch) << " grid=" << report.grid.describe()
      << " repetitions=" << report.repetitions << '\n';
  out << "# scheme    calls      total_ms  overhead_ms  spread_ms  net_ns/call  steps  max  "
         ">1step  checksum\n";
  for (const auto& s : report.schemes) {
    const auto& t = s.timing;
    out << "# " << to_string(s.scheme)
        << std::string(10 - to_string(s.scheme).size(), ' ') << t.calls << "  "
        << format(t.total.count() * 1e-6, "%10.3f") << "  "
        << format(t.overhead.count() * 1e-6, "%10.3f") << "  "
        << format(t.spread.count() * 1e-6, "%9.3f") << "  "
        << format(t.net_per_call.count(), "%10.2f") << "  " << s.total_steps << "  "
        << s.max_steps << "  " << s.points_needing_extra_steps << "  " << format(t.checksum)
        << (s.checksum_stable ? "" : "  (checksum unstable)") << '\n';
  }
  out << "# region              scheme   calls  net_ns/call  steps\n";
  for (const auto& r : report.regions) {
    const std::string name(to_string(r.region));
    out << "# " << name << std::string(name.size() < 20 ? 20 - name.size() : 1, ' ')
        << to_string(r.scheme) << "  " << r.timing.calls << "  "
        << format(r.timing.net_per_call.count(), "%10.2f") << "  " << r.total_steps << '\n';
  }
  for (const auto& p : report.points)
    out << format(p.x) << ' ' << to_string(p.scheme) << ' '
        << format(p.net_per_call.count(), "%.3f") << ' ' << p.steps << '\n';
}

SweepTiming time_sweep(Branch branch, Stage stage, const GridSpec& grid) {
  const auto t0 = Clock::now();
  const auto serial = accuracy_sweep(branch, stage, grid, Execution::serial);
  const auto t1 = Clock::now();
  const auto parallel = accuracy_sweep(branch, stage, grid, Execution::parallel);
  const auto t2 = Clock::now();

  bool identical = serial.samples.size() == parallel.samples.size();
  for (std::size_t i = 0; identical && i < serial.samples.size(); ++i)
    identical = serial.samples[i].x == parallel.samples[i].x &&
                serial.samples[i].delta == parallel.samples[i].delta &&
                serial.samples[i].region == parallel.samples[i].region;
  return {t1 - t0, t2 - t1, omp_get_max_threads(), identical};
}

}  // namespace lambertw::bench
