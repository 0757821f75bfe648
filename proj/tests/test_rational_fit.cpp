#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lambertw/accuracy.hpp"
#include "lambertw/oracle.hpp"
#include "lambertw/rational_fit.hpp"

namespace {

using lambertw::Branch;
using lambertw::FitNorm;

double min_delta(const lambertw::RationalFit& fit, const lambertw::CurveSamples& s) {
  double worst = lambertw::kDeltaCap;
  for (std::size_t i = 0; i < s.x.size(); ++i)
    if (s.w[i] != 0)
      worst = std::fmin(worst, lambertw::delta_accuracy(lambertw::rational_fit_eval(fit, s.x[i]), s.w[i]));
  return worst;
}

TEST(CurveSamples, LieOnTheCurve) {
  const auto s = lambertw::lambert_curve_samples(-1.0, 2.0, 31);
  ASSERT_EQ(s.x.size(), 31u);
  EXPECT_EQ(s.w.front(), -1.0);
  EXPECT_EQ(s.w.back(), 2.0);
  for (std::size_t i = 0; i < s.x.size(); ++i) EXPECT_DOUBLE_EQ(s.x[i], s.w[i] * std::exp(s.w[i]));
  EXPECT_THROW(lambertw::lambert_curve_samples(0, 1, 1), std::invalid_argument);
}

TEST(FitRational, RecoversAnExactRational) {
  const lambertw::RationalFit truth({1, 0.5, -0.25}, {1, 0.75, 0.125}, true);
  std::vector<double> x, y;
  for (int i = 0; i <= 200; ++i) {
    x.push_back(-0.5 + i / 200.0);
    y.push_back(lambertw::rational_fit_eval(truth, x.back()));
  }
  const auto fit = lambertw::fit_rational(x, y, 2, 2, true);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(fit.numerator[i], truth.numerator[i], 1e-10);
    EXPECT_NEAR(fit.denominator[i], truth.denominator[i], 1e-10);
  }
  const auto free = lambertw::fit_rational(x, y, 3, 2, false);
  EXPECT_LT(lambertw::max_abs_residual(free, x, y), 1e-12);
}

TEST(FitRational, RejectsBadInput) {
  const std::vector<double> x{1, 2, 3}, w{1, 2};
  EXPECT_THROW(lambertw::fit_rational(x, w, 1, 1, false), std::invalid_argument);
  EXPECT_THROW(lambertw::fit_rational(x, x, 2, 3, false), std::invalid_argument);
  EXPECT_THROW(lambertw::fit_rational(x, x, 1, 1, false, {FitNorm::least_squares, 0}),
               std::invalid_argument);
}

TEST(FitRational, LeastSquaresRefitOfPrincipalFits) {
  const auto s1 = lambertw::lambert_curve_samples(lambertw::reference_w(Branch::principal, -0.3), 0.0, 3000);
  const auto f1 = lambertw::fit_rational(s1.x, s1.w, 4, 4, true);
  EXPECT_GE(min_delta(f1, s1), 5.0);
  // Leading coefficient agrees with the frozen one to three decimals.
  EXPECT_NEAR(f1.numerator[1], lambertw::principal_fit_1().numerator[1], 1e-3);

  const auto s2 = lambertw::lambert_curve_samples(lambertw::reference_w(Branch::principal, 0.3), 1.0, 3000);
  const auto f2 = lambertw::fit_rational(s2.x, s2.w, 4, 4, true);
  EXPECT_GE(min_delta(f2, s2), 5.0);
}

TEST(FitRational, FrozenFitsOnTheirIntervals) {
  const auto s1 = lambertw::lambert_curve_samples(lambertw::reference_w(Branch::principal, -0.3), 0.0, 3000);
  EXPECT_GE(min_delta(lambertw::principal_fit_1(), s1), 5.0);
  const auto s2 = lambertw::lambert_curve_samples(lambertw::reference_w(Branch::principal, 0.3), 1.0, 3000);
  EXPECT_GE(min_delta(lambertw::principal_fit_2(), s2), 5.0);
}

TEST(FitRational, MinimaxRefitReproducesBridgeFit) {
  const auto s = lambertw::lambert_curve_samples(lambertw::reference_w(Branch::lower, -0.05),
                                                 lambertw::reference_w(Branch::lower, -0.315), 3000);
  const auto fit = lambertw::fit_rational(s.x, s.w, 2, 5, false, {FitNorm::minimax_relative, 1000});
  const auto& frozen = lambertw::lower_bridge_fit();
  ASSERT_EQ(fit.numerator.size(), frozen.numerator.size());
  ASSERT_EQ(fit.denominator.size(), frozen.denominator.size());
  for (std::size_t i = 0; i < fit.numerator.size(); ++i)
    EXPECT_NEAR(fit.numerator[i], frozen.numerator[i], 1e-9 * std::fabs(frozen.numerator[i]));
  for (std::size_t i = 0; i < fit.denominator.size(); ++i)
    EXPECT_NEAR(fit.denominator[i], frozen.denominator[i], 1e-9 * std::fabs(frozen.denominator[i]));
  EXPECT_GE(min_delta(frozen, s), 5.0);
  // The main lower-branch fit falls short at the low end of the interval.
  EXPECT_LT(min_delta(lambertw::lower_fit(), s), 5.0);
}

}  // namespace
