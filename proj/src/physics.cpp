#include "lambertw/physics.hpp"

#include <cmath>
#include <string>

#include "lambertw/branch.hpp"
#include "lambertw/lambert_w.hpp"

namespace lambertw::physics {

namespace {
const double kMoyalPeak = std::exp(-0.5);
}

double moyal(double x) { return std::exp(-0.5 * (x + std::exp(-x))); }

double moyal_inverse(double y, Side side) {
  if (!(y > 0) || y > kMoyalPeak + 4 * 0x1p-53)
    throw DomainError("moyal_inverse: y must lie in (0, e^-1/2], got " + std::to_string(y));
  const Branch branch = side == Side::plus ? Branch::principal : Branch::lower;
  return evaluate(branch, -y * y).value - 2 * std::log(y);
}

GaisserHillasParams GaisserHillasParams::make(double x0, double x_max, double lambda) {
  if (!(lambda > 0)) throw DomainError("GaisserHillasParams: lambda must be > 0");
  if (!(x_max > x0)) throw DomainError("GaisserHillasParams: x_max must exceed x0");
  return {x0, x_max, lambda};
}

Rescaled gh_rescale(double depth, const GaisserHillasParams& p) {
  return {(depth - p.x0) / p.lambda, (p.x_max - p.x0) / p.lambda};
}

double gaisser_hillas(double x, double x_max) {
  if (!(x >= 0)) throw DomainError("gaisser_hillas: x must be >= 0");
  if (!(x_max > 0)) throw DomainError("gaisser_hillas: x_max must be > 0");
  if (x == 0) return 0.0;
  return std::exp(x_max * std::log(x / x_max) + (x_max - x));
}

double gaisser_hillas(double depth, const GaisserHillasParams& p) {
  const auto r = gh_rescale(depth, p);
  return gaisser_hillas(r.x, r.x_max);
}

Crossings gh_inverse(double y, double x_max) {
  if (!(y > 0 && y <= 1)) throw DomainError("gh_inverse: y must lie in (0, 1]");
  if (!(x_max > 0)) throw DomainError("gh_inverse: x_max must be > 0");
  const double arg = -std::pow(y, 1 / x_max) * constants::kInvE;
  // Principal branch (W >= -1) gives the rising side, lower branch the tail.
  return {-x_max * evaluate(Branch::principal, arg).value,
          -x_max * evaluate(Branch::lower, arg).value};
}

Crossings gh_inverse(double y, const GaisserHillasParams& p) {
  const auto r = gh_rescale(p.x_max, p);
  const auto c = gh_inverse(y, r.x_max);
  return {p.lambda * c.left + p.x0, p.lambda * c.right + p.x0};
}

}  // namespace lambertw::physics
