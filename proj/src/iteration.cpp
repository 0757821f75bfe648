#include "lambertw/iteration.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lambertw/branch.hpp"

namespace lambertw {

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::halley ? "halley" : "fritsch";
}

double halley_step(double x, double w) {
  const double w1 = w + 1;
  if (std::fabs(w1) < kSingularityGuard)
    throw SingularityError("halley_step: w is within 1e-12 of -1");
  const double ew = std::exp(w);
  const double t = w * ew - x;
  const double s = (w + 2) / (2 * w1);
  const double u = w1 * ew;
  return w + t / (t * s - u);
}

double fritsch_step(double x, double w) {
  if (!(x / w > 0))
    throw DomainError("fritsch_step: x and w must share sign (x / w > 0)");
  const double w1 = 1 + w;
  if (std::fabs(w1) < kSingularityGuard)
    throw SingularityError("fritsch_step: w is within 1e-12 of -1");
  const double z = std::log(x / w) - w;
  const double q = 2 * w1 * (w1 + (2.0 / 3.0) * z);
  const double denom = q - 2 * z;
  if (std::fabs(denom) < DBL_MIN)
    throw SingularityError("fritsch_step: q - 2z underflows");
  const double eps = z / w1 * (q - z) / denom;
  return w * (1 + eps);
}

double step(Scheme scheme, double x, double w) {
  return scheme == Scheme::halley ? halley_step(x, w) : fritsch_step(x, w);
}

double residual(double x, double w) { return std::fabs(w * std::exp(w) - x); }

IterationTrace iterate(double x, double w0, Scheme scheme, double tol, int max_steps) {
  if (!(tol > 0)) throw std::invalid_argument("iterate: tol must be positive");
  if (max_steps < 1) throw std::invalid_argument("iterate: max_steps must be >= 1");

  IterationTrace trace{scheme, {}, false};
  trace.steps.reserve(static_cast<std::size_t>(max_steps));
  const double bound = tol * std::fmax(std::fabs(x), DBL_MIN);
  double w = w0;
  for (int n = 0; n < max_steps; ++n) {
    w = step(scheme, x, w);
    const double r = residual(x, w);
    trace.steps.push_back({w, r});
    if (r <= bound) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

}  // namespace lambertw
