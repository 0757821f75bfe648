#pragma once

// Re-derivation of the rational initial approximations from sample points
// that lie exactly on the Lambert W curve.

#include <span>
#include <vector>

#include "lambertw/core_approx.hpp"

namespace lambertw {

struct CurveSamples {
  std::vector<double> x;  // w e^w
  std::vector<double> w;
};

/// `count` equally spaced w in [w_lower, w_upper] paired with x = w e^w.
CurveSamples lambert_curve_samples(double w_lower, double w_upper, int count);

enum class FitNorm {
  /// Sum of squared absolute residuals.
  least_squares,
  /// Largest relative residual |Q(x) - w| / |w| (Lawson reweighting).
  minimax_relative,
  /// Largest absolute residual |Q(x) - w| (Lawson reweighting).
  minimax_absolute,
};

struct FitOptions {
  FitNorm norm = FitNorm::least_squares;
  int passes = 8;
};

/// Rational fit of w(x).
///
/// With leading_factor_x the model is x (1 + a_1 x + .. + a_n x^n) /
/// (1 + b_1 x + .. + b_m x^m); otherwise (a_0 + .. + a_n x^n) / (1 + .. + b_m x^m).
/// Each pass solves the linearised problem N(x) - w D(x) = 0 with rows scaled
/// by 1 / D(x) of the previous pass, so the residual being minimised tends to
/// the true one. For minimax_relative the rows additionally carry Lawson
/// weights, multiplied by the relative residual after every pass; the pass
/// with the smallest maximum is returned.
RationalFit fit_rational(std::span<const double> x, std::span<const double> w, int numerator_degree,
                         int denominator_degree, bool leading_factor_x,
                         const FitOptions& options = {});

double max_relative_residual(const RationalFit& fit, std::span<const double> x,
                             std::span<const double> w);

double max_abs_residual(const RationalFit& fit, std::span<const double> x,
                        std::span<const double> w);

}  // namespace lambertw
