#pragma once

// Timing harness comparing the Halley- and Fritsch-refined evaluations.
//
// Every timed loop perturbs x slightly on each call and sums the results so
// the compiler cannot hoist or drop the calls. The same loop is timed with an
// identity function in place of the evaluation; that overhead is subtracted
// to estimate the cost of the evaluation alone.

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "lambertw/accuracy.hpp"
#include "lambertw/branch.hpp"
#include "lambertw/core_approx.hpp"
#include "lambertw/iteration.hpp"

namespace lambertw::bench {

using Nanoseconds = std::chrono::duration<double, std::nano>;

inline constexpr long kMinCallsPerPoint = 10'000;

/// Evaluation timed for `scheme`: initial approximation, then steps of the
/// scheme until the residual is within 1e-14 max(|x|, 1) (at most 8 steps).
double solve(Branch branch, double x, Scheme scheme);

/// Steps `scheme` needs from the initial approximation to reach
/// |w e^w - x| <= 1e-14 |x|, as counted by iterate(). 0 when the point is
/// the branch point or otherwise needs no refinement.
int steps_to_converge(Branch branch, double x, Scheme scheme);

struct Timing {
  long calls = 0;
  Nanoseconds total{0};     // median over repetitions
  Nanoseconds overhead{0};  // identity loop, median over repetitions
  Nanoseconds spread{0};    // max - min of the evaluation loop totals
  Nanoseconds net_per_call{0};
  double checksum = 0;
};

struct RegionTiming {
  Scheme scheme;
  RegionKind region;
  Timing timing;
  long total_steps = 0;
};

struct PointRecord {
  double x;
  Scheme scheme;
  Nanoseconds net_per_call;
  int steps;
};

struct SchemeSummary {
  Scheme scheme;
  Timing timing;
  long total_steps = 0;
  int max_steps = 0;
  long points_needing_extra_steps = 0;  // points with steps > 1
  bool checksum_stable = true;          // all repetitions and the untimed pass agree
};

struct BenchReport {
  Branch branch;
  GridSpec grid;
  int repetitions;
  std::vector<SchemeSummary> schemes;
  std::vector<RegionTiming> regions;
  std::vector<PointRecord> points;
  Timing identity;  // identity baseline over the whole grid

  const SchemeSummary* find(Scheme scheme) const;
};

struct BenchOptions {
  long calls_per_point = 30'000;
  int repetitions = 5;
};

/// Throws std::invalid_argument for fewer than kMinCallsPerPoint calls or
/// fewer than 5 repetitions.
BenchReport run_benchmark(Branch branch, const GridSpec& grid, const std::vector<Scheme>& schemes,
                          const BenchOptions& options = {});

/// Sum of solve() over the same perturbed inputs a timed run uses, without
/// any timing.
double untimed_checksum(Branch branch, const std::vector<double>& xs, Scheme scheme,
                        long calls_per_point);

/// Plain-text table followed by "x scheme net_ns steps" records.
void write_report(std::ostream& out, const BenchReport& report);

struct SweepTiming {
  Nanoseconds serial;
  Nanoseconds parallel;
  int threads;
  bool identical;  // both paths produced the same report
};

/// Times the serial and OpenMP accuracy sweeps on the same grid.
SweepTiming time_sweep(Branch branch, Stage stage, const GridSpec& grid);

}  // namespace lambertw::bench
