#include "lambertw/lambert_w.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace lambertw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLowerRecursionDepth = 9;

using namespace breakpoints;

constexpr std::array<ApproximationRegion, 4> kPrincipalTable{{
    {Branch::principal, constants::kBranchPointX, kPrincipalSeriesEnd,
     RegionKind::branch_point_series},
    {Branch::principal, kPrincipalSeriesEnd, kPrincipalFit1End, RegionKind::rational_fit_1},
    {Branch::principal, kPrincipalFit1End, kPrincipalFit2End, RegionKind::rational_fit_2},
    {Branch::principal, kPrincipalFit2End, kInf, RegionKind::asymptotic},
}};

constexpr std::array<ApproximationRegion, 4> kLowerTable{{
    {Branch::lower, constants::kBranchPointX, kLowerSeriesEnd, RegionKind::branch_point_series},
    {Branch::lower, kLowerSeriesEnd, kLowerBridgeEnd, RegionKind::rational_fit_1},
    {Branch::lower, kLowerBridgeEnd, kLowerFitEnd, RegionKind::rational_fit_2},
    {Branch::lower, kLowerFitEnd, 0.0, RegionKind::continued_log},
}};

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void check_domain(Branch branch, double x) {
  if (std::isnan(x)) throw DomainError("x is NaN");
  if (x < constants::kBranchPointX - constants::kBranchPointSlack)
    throw DomainError("x = " + describe(x) + " is below the branch point -1/e = " +
                      describe(constants::kBranchPointX));
  if (branch == Branch::lower && !(x < 0))
    throw DomainError("x = " + describe(x) +
                      " is outside the lower branch domain [-1/e, 0); W_-1 is singular at 0");
}

bool at_branch_point(double x) {
  return std::fabs(x - constants::kBranchPointX) <= constants::kBranchPointSlack;
}

double approximate(Branch branch, RegionKind kind, double x) {
  switch (kind) {
    case RegionKind::branch_point_series:
      return branch_point_series(branch, x);
    case RegionKind::rational_fit_1:
      return rational_fit_eval(branch == Branch::principal ? principal_fit_1() : lower_bridge_fit(),
                               x);
    case RegionKind::rational_fit_2:
      return rational_fit_eval(branch == Branch::principal ? principal_fit_2() : lower_fit(), x);
    case RegionKind::asymptotic:
      return asymptotic_series(branch, x);
    case RegionKind::continued_log:
      return continued_log_recursion_wm1(x, kLowerRecursionDepth);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::span<const ApproximationRegion> dispatch_table(Branch branch) {
  if (branch == Branch::principal) return kPrincipalTable;
  return kLowerTable;
}

RegionKind region_for(Branch branch, double x) {
  check_domain(branch, x);
  const auto table = dispatch_table(branch);
  for (const auto& region : table)
    if (x < region.upper) return region.kind;
  return table.back().kind;  // +inf on the principal branch
}

double lambert_w_approximation(Branch branch, double x) {
  const RegionKind kind = region_for(branch, x);
  if (branch == Branch::principal && std::isinf(x)) return kInf;
  if (at_branch_point(x)) return -1.0;
  return approximate(branch, kind, x);
}

EvalResult evaluate(Branch branch, double x, const RefinementPolicy& policy) {
  const RegionKind kind = region_for(branch, x);

  if (branch == Branch::principal) {
    if (std::isinf(x)) return {kInf, kind, 0, 0.0};
    if (x == 0) return {0.0, kind, 0, 0.0};
  }
  if (at_branch_point(x)) return {-1.0, kind, 0, residual(x, -1.0)};

  double w = approximate(branch, kind, x);
  int steps = 0;
  const bool saturated =
      kind == RegionKind::branch_point_series && one_plus_ex(x) <= kSeriesSaturation;
  if (!saturated) {
    for (int i = 0; i < policy.steps; ++i, ++steps) w = step(policy.scheme, x, w);
    const double bound = policy.residual_tolerance * std::fmax(std::fabs(x), 1.0);
    for (int i = 0; i < policy.fallback_steps && residual(x, w) > bound; ++i, ++steps)
      w = step(policy.scheme, x, w);
  }

  // Rounding in the last step must not carry the value across -1.
  if (branch == Branch::principal && w < -1) w = -1;
  if (branch == Branch::lower && w > -1) w = -1;
  return {w, kind, steps, residual(x, w)};
}

double lambert_w(int branch, double x) { return evaluate(branch_from_int(branch), x).value; }

}  // namespace lambertw
