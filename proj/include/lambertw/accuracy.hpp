#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lambertw/branch.hpp"
#include "lambertw/core_approx.hpp"

namespace lambertw {

/// Returned by delta_accuracy when the approximation is exact.
inline constexpr double kDeltaCap = 17.0;

/// Number of correct decimal places: log10|exact| - log10|approx - exact|,
/// capped at kDeltaCap. Throws DomainError when exact == 0.
double delta_accuracy(double approx, double exact);

enum class GridKind { linear, log };

/// `count` points from `lower` to `upper` inclusive. Log grids need both
/// bounds of the same sign and are spaced evenly in log|x|.
struct GridSpec {
  GridKind kind = GridKind::linear;
  double lower = 0;
  double upper = 0;
  int count = 0;

  std::vector<double> points() const;
  std::string describe() const;  // e.g. "log[0.3,100000,1000]"
};

/// Parses the describe() form back into a GridSpec.
GridSpec parse_grid(std::string_view text);

enum class Stage { approximation, one_halley, one_fritsch, converged };

std::string_view to_string(Stage stage);
Stage parse_stage(std::string_view text);

/// Value of `stage` at x. The single-step stages use the same branch-point
/// handling as evaluate() but never take fallback steps.
double evaluate_stage(Branch branch, Stage stage, double x);

struct AccuracySample {
  double x;
  double delta;
  RegionKind region;
};

struct AccuracyReport {
  Branch branch;
  Stage stage;
  GridSpec grid;
  std::vector<AccuracySample> samples;  // ordered by x as generated
  double min_delta;
};

enum class Execution { serial, parallel };

/// Evaluates `stage` at every grid point against reference_w. Grid points
/// equal to 0 are skipped (delta is undefined there). Errors are rethrown as
/// DomainError with the offending x in the message.
///
/// The parallel path splits grid points across OpenMP threads; the serial
/// path is the reference and both produce identical reports.
AccuracyReport accuracy_sweep(Branch branch, Stage stage, const GridSpec& grid,
                              Execution execution = Execution::parallel);

/// Writes the plain-text data file: a '#' header line, then one
/// "x delta region" record per sample at full precision.
void write_accuracy_file(std::ostream& out, const AccuracyReport& report);

}  // namespace lambertw
