// Re-derives the rational initial approximations from points on the W curve
// and prints their coefficients together with the worst decimal-place
// accuracy over the fitted interval.

#include <cmath>
#include <cstdio>

#include "lambertw/accuracy.hpp"
#include "lambertw/oracle.hpp"
#include "lambertw/rational_fit.hpp"

using namespace lambertw;

namespace {

void print(const char* name, const RationalFit& fit, const CurveSamples& s) {
  std::printf("%s (%s)\n  numerator:  ", name, fit.leading_factor_x ? "x N/D" : "N/D");
  for (double c : fit.numerator) std::printf(" %.17g", c);
  std::printf("\n  denominator:");
  for (double c : fit.denominator) std::printf(" %.17g", c);
  double worst = kDeltaCap;
  for (std::size_t i = 0; i < s.x.size(); ++i)
    if (s.w[i] != 0) worst = std::fmin(worst, delta_accuracy(rational_fit_eval(fit, s.x[i]), s.w[i]));
  std::printf("\n  min delta on samples: %.3f\n", worst);
}

}  // namespace

int main() {
  constexpr int kSamples = 3000;
  {
    const auto s = lambert_curve_samples(reference_w(Branch::principal, -0.3), 0.0, kSamples);
    print("principal fit 1, x in [-0.3, 0]", fit_rational(s.x, s.w, 4, 4, true), s);
  }
  {
    const auto s = lambert_curve_samples(reference_w(Branch::principal, 0.3), 1.0, kSamples);
    print("principal fit 2, x in [0.3, 2e]", fit_rational(s.x, s.w, 4, 4, true), s);
  }
  {
    const auto s = lambert_curve_samples(reference_w(Branch::lower, -0.05),
                                         reference_w(Branch::lower, -0.3), kSamples);
    print("lower fit, x in [-0.3, -0.05]", fit_rational(s.x, s.w, 2, 5, false), s);
  }
  {
    const auto s = lambert_curve_samples(reference_w(Branch::lower, -0.0500),
                                         reference_w(Branch::lower, -0.3150), kSamples);
    print("lower bridge fit, x in [-0.3150, -0.0500]",
          fit_rational(s.x, s.w, 2, 5, false, {FitNorm::minimax_relative, 1000}), s);
  }
}
