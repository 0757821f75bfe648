#include "lambertw/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace lambertw {

namespace {

static_assert(std::numeric_limits<long double>::digits >= 64,
              "reference solver needs an extended-precision long double");

constexpr std::uint64_t kSignBit = std::uint64_t{1} << 63;

// Maps doubles onto unsigned integers so that integer order matches numeric
// order (-0 and +0 become neighbours).
std::uint64_t to_ordered(double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  return (bits & kSignBit) ? ~bits : bits | kSignBit;
}

double from_ordered(std::uint64_t k) {
  return std::bit_cast<double>((k & kSignBit) ? k & ~kSignBit : ~k);
}

long double f(double y, double x) {
  const long double ly = y;
  return ly * std::exp(ly) - static_cast<long double>(x);
}

// Bisects on [lo, hi] where f(lo) and f(hi) have opposite signs.
double bisect(double lo, double hi, double x) {
  const bool lo_negative = f(lo, x) < 0;
  std::uint64_t a = to_ordered(lo);
  std::uint64_t b = to_ordered(hi);
  while (b - a > 1) {
    const std::uint64_t mid = a + (b - a) / 2;
    const long double fm = f(from_ordered(mid), x);
    if (fm == 0) return from_ordered(mid);
    if ((fm < 0) == lo_negative)
      a = mid;
    else
      b = mid;
  }
  const double ya = from_ordered(a);
  const double yb = from_ordered(b);
  return std::fabs(f(ya, x)) <= std::fabs(f(yb, x)) ? ya : yb;
}

}  // namespace

long double reference_residual(double x, double y) { return std::fabs(f(y, x)); }

double reference_w(Branch branch, double x) {
  constexpr double kBp = constants::kBranchPointX;
  if (std::isnan(x)) throw DomainError("reference_w: x is NaN");
  if (x < kBp - constants::kBranchPointSlack)
    throw DomainError("reference_w: x is below the branch point -1/e");
  if (std::fabs(x - kBp) <= constants::kBranchPointSlack) return -1.0;

  if (branch == Branch::principal) {
    if (x == 0) return 0.0;
    if (std::isinf(x)) return x;
    // f is increasing on [-1, inf); f(-1) < 0 for x above the branch point.
    double hi = std::fmax(1.0, std::log(std::fmax(x, 1.0)) + 1.0);
    while (f(hi, x) < 0) hi *= 2;
    return bisect(-1.0, hi, x);
  }

  if (!(x < 0)) throw DomainError("reference_w: lower branch needs x < 0");
  // f is decreasing on (-inf, -1]; f(-1) < 0 and f(lo) > 0 for lo far enough out.
  double lo = std::fmin(-1.0, std::log(-x) - 40.0);
  while (f(lo, x) < 0) lo *= 2;
  return bisect(lo, -1.0, x);
}

}  // namespace lambertw
