#pragma once

#include <string_view>
#include <vector>

namespace lambertw {

enum class Scheme { halley, fritsch };

std::string_view to_string(Scheme scheme);

/// |1 + w| below this makes both steps singular.
inline constexpr double kSingularityGuard = 1e-12;

/// One Halley step on w e^w = x (third order).
double halley_step(double x, double w);

/// One Fritsch step on w e^w = x (fourth order). Needs x / w > 0.
double fritsch_step(double x, double w);

double step(Scheme scheme, double x, double w);

/// |w e^w - x|.
double residual(double x, double w);

struct IterationStep {
  double w;
  double residual;
};

struct IterationTrace {
  Scheme scheme;
  std::vector<IterationStep> steps;  // one entry per applied step
  bool converged = false;

  double value() const { return steps.back().w; }
};

/// Applies `scheme` starting from w0 until |w e^w - x| <= tol * max(|x|, DBL_MIN)
/// or max_steps steps have been taken. At least one step is always applied.
/// Running out of steps is reported through `converged`, not thrown.
IterationTrace iterate(double x, double w0, Scheme scheme = Scheme::fritsch, double tol = 1e-14,
                       int max_steps = 8);

}  // namespace lambertw
