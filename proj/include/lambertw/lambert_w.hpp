#pragma once

// Public entry points.
//
//   branch | domain          | range
//   -------+-----------------+-----------
//      0   | [-1/e, +inf]    | [-1, +inf]
//     -1   | [-1/e, 0)       | (-inf, -1]
//
// Both branches meet at (-1/e, -1). Arguments up to 4 ulp below the double
// nearest to -1/e are accepted and treated as the branch point. Everything
// outside the table throws DomainError.

#include <span>

#include "lambertw/branch.hpp"
#include "lambertw/core_approx.hpp"
#include "lambertw/iteration.hpp"

namespace lambertw {

struct ApproximationRegion {
  Branch branch;
  double lower;  // inclusive
  double upper;  // exclusive
  RegionKind kind;
};

namespace breakpoints {
inline constexpr double kPrincipalSeriesEnd = -0.32358170806015724;
inline constexpr double kPrincipalFit1End = 0.14546954290661823;
inline constexpr double kPrincipalFit2End = 8.706658967856612;
// The series and lower_fit() both drop to ~4.7 places near -0.303; a bridge
// fit covers [kLowerSeriesEnd, kLowerBridgeEnd).
inline constexpr double kLowerSeriesEnd = -0.3145;
inline constexpr double kLowerBridgeEnd = -0.296;
inline constexpr double kLowerFitEnd = -0.051012917658221676;
}  // namespace breakpoints

/// Regions of the piecewise initial approximation, ordered by x.
///   principal: series | fit 1 | fit 2 | asymptotic
///   lower:     series | bridge fit | fit | continued logarithm (depth 9)
std::span<const ApproximationRegion> dispatch_table(Branch branch);

/// Region used for x. Throws DomainError outside the branch domain.
RegionKind region_for(Branch branch, double x);

/// Below this value of 1 + e x the truncated branch-point series is exact to
/// double precision, and the iteration steps (which divide by 1 + w) would
/// only add rounding noise. Refinement is skipped there.
inline constexpr double kSeriesSaturation = 0x1p-13;

/// Piecewise initial approximation, good to >= 5 decimal places except on
/// the principal branch beyond x = 7 (>= 3 places).
double lambert_w_approximation(Branch branch, double x);

template <Branch B>
double lambert_w_approximation(double x) {
  return lambert_w_approximation(B, x);
}

struct EvalResult {
  double value;
  RegionKind region;
  int refinement_steps;
  double residual;  // |value e^value - x|
};

/// How evaluate() refines the initial approximation. `steps` steps are always
/// taken (unless the series is saturated); after that up to `fallback_steps`
/// more are taken while the residual exceeds
/// residual_tolerance * max(|x|, 1).
struct RefinementPolicy {
  Scheme scheme = Scheme::fritsch;
  int steps = 1;
  int fallback_steps = 3;
  double residual_tolerance = 1e-14;
};

/// Full evaluation with diagnostics.
///
/// Special cases: x = 0 on the principal branch gives 0 exactly, +inf gives
/// +inf, x at the branch point (within the clamp) gives -1. NaN, -inf, x = 0
/// on the lower branch and anything outside the domain throw DomainError.
EvalResult evaluate(Branch branch, double x, const RefinementPolicy& policy = {});

template <Branch B>
double lambert_w(double x) {
  return evaluate(B, x).value;
}

/// Runtime-branch form. `branch` must be 0 or -1.
double lambert_w(int branch, double x);

}  // namespace lambertw
