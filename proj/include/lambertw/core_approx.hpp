#pragma once

// Initial approximations of W(x): branch-point series, asymptotic series,
// rational fits and the three recursion schemes. None of these refine their
// result; see iteration.hpp for that.

#include <array>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lambertw/branch.hpp"

namespace lambertw {

enum class RegionKind {
  branch_point_series,
  rational_fit_1,
  rational_fit_2,
  asymptotic,
  continued_log,
};

std::string_view to_string(RegionKind kind);

/// Coefficients b_0..b_9 of W(x) = sum b_i p^i, p = +-sqrt(2(1 + e x)).
/// b_8 and b_9 are pinned by derive_branch_coefficients in the tests.
inline constexpr std::array<double, 10> kBranchPointCoefficients = {
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
};

inline constexpr int kMaxBranchPointOrder = 9;

/// Evaluates the branch-point series truncated after p^order.
///
/// p is taken positive on the principal branch and negative on the lower
/// one. Arguments up to 4 ulp below -1/e are clamped onto the branch point.
double branch_point_series(Branch branch, double x, int order = kMaxBranchPointOrder);

/// Reverts the Taylor series of 2(e (y-1) e^(y-1) + 1) around y = 0 and
/// returns the branch-point coefficients b_0..b_n as exact rationals.
std::vector<boost::multiprecision::cpp_rational> derive_branch_coefficients_exact(int n);

/// Same as above, rounded to double.
std::vector<double> derive_branch_coefficients(int n);

/// Asymptotic expansion A(a, b) through the a^-5 term, with
/// (a, b) = (ln x, ln ln x) on the principal branch (x > 1) and
/// (ln(-x), ln(-ln(-x))) on the lower branch (-1/e < x < 0).
double asymptotic_series(Branch branch, double x);

/// A(a, b) itself, for callers that already have the logarithms.
double asymptotic_expansion(double a, double b);

/// Rational function with coefficients in ascending powers. The denominator
/// constant term is always 1. With leading_factor_x the value is
/// x * N(x) / D(x), otherwise N(x) / D(x).
struct RationalFit {
  std::vector<double> numerator;
  std::vector<double> denominator;
  bool leading_factor_x = false;

  /// Throws std::invalid_argument when the denominator does not start with 1
  /// or either polynomial is empty.
  RationalFit(std::vector<double> num, std::vector<double> den, bool leading_x);
};

/// Horner evaluation of a RationalFit. Throws DomainError if D(x) == 0.
double rational_fit_eval(const RationalFit& fit, double x);

/// Principal branch, fitted on W values mapping to x in [-0.3, 0].
const RationalFit& principal_fit_1();
/// Principal branch, fitted on W values mapping to x in [0.3, 2e].
const RationalFit& principal_fit_2();
/// Lower branch, fitted on W values mapping to x in [-0.3, -0.05].
const RationalFit& lower_fit();
/// Lower branch, short-range fit bridging the branch-point series and
/// lower_fit() near x = -0.3.
const RationalFit& lower_bridge_fit();

/// Continued logarithm for the lower branch:
/// R_0 = ln(-x), R_n = ln(-x) - ln(-R_{n-1}).
double continued_log_recursion_wm1(double x, int depth);

/// L_0 = ln x, L_n = ln x - ln L_{n-1}; principal branch, x > e.
double log_recursion_w0(double x, int depth);

/// E_0 = x, E_n = x / exp(E_{n-1}); principal branch, -1/e < x <= e.
double exp_recursion_w0(double x, int depth);

}  // namespace lambertw
