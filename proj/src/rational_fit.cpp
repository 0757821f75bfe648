#include "lambertw/rational_fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace lambertw {

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

CurveSamples lambert_curve_samples(double w_lower, double w_upper, int count) {
  if (count < 2) throw std::invalid_argument("lambert_curve_samples: need at least 2 points");
  CurveSamples s;
  s.x.reserve(static_cast<std::size_t>(count));
  s.w.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double w = w_lower + (w_upper - w_lower) * i / (count - 1);
    s.w.push_back(w);
    s.x.push_back(w * std::exp(w));
  }
  return s;
}

RationalFit fit_rational(std::span<const double> x, std::span<const double> w, int numerator_degree,
                         int denominator_degree, bool leading_factor_x,
                         const FitOptions& options) {
  if (x.size() != w.size()) throw std::invalid_argument("fit_rational: size mismatch");
  if (numerator_degree < 0 || denominator_degree < 0)
    throw std::invalid_argument("fit_rational: negative degree");
  if (options.passes < 1) throw std::invalid_argument("fit_rational: need at least one pass");

  // Unknowns: free numerator coefficients, then b_1..b_m.
  const int num_free = leading_factor_x ? numerator_degree : numerator_degree + 1;
  const int unknowns = num_free + denominator_degree;
  const auto rows = static_cast<Eigen::Index>(x.size());
  if (rows < unknowns) throw std::invalid_argument("fit_rational: too few samples");
  const bool minimax = options.norm != FitNorm::least_squares;
  const bool relative = options.norm == FitNorm::minimax_relative;

  Eigen::ArrayXd den_prev = Eigen::ArrayXd::Ones(rows);
  Eigen::ArrayXd lawson = Eigen::ArrayXd::Constant(rows, 1.0 / static_cast<double>(rows));
  std::vector<double> best_num, best_den;
  double best = std::numeric_limits<double>::infinity();

  for (int pass = 0; pass < options.passes; ++pass) {
    Eigen::MatrixXd a(rows, unknowns);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double xi = x[static_cast<std::size_t>(r)];
      const double wi = w[static_cast<std::size_t>(r)];
      double s = 1.0 / std::fabs(den_prev(r));
      if (relative)
        s *= std::sqrt(lawson(r)) / std::fabs(wi);
      else if (minimax)
        s *= std::sqrt(lawson(r));
      double power = leading_factor_x ? xi : 1.0;
      for (int j = 0; j < num_free; ++j) {
        if (leading_factor_x) power *= xi;  // x^{j+2} multiplies a_{j+1}
        a(r, j) = s * power;
        if (!leading_factor_x) power *= xi;
      }
      power = 1.0;
      for (int j = 0; j < denominator_degree; ++j) {
        power *= xi;
        a(r, num_free + j) = -s * wi * power;
      }
      rhs(r) = s * (leading_factor_x ? wi - xi : wi);
    }
    const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(rhs);

    std::vector<double> num(1, leading_factor_x ? 1.0 : sol(0));
    for (int j = leading_factor_x ? 0 : 1; j < num_free; ++j) num.push_back(sol(j));
    std::vector<double> den(1, 1.0);
    for (int j = 0; j < denominator_degree; ++j) den.push_back(sol(num_free + j));

    Eigen::ArrayXd err(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double xi = x[static_cast<std::size_t>(r)];
      const double wi = w[static_cast<std::size_t>(r)];
      den_prev(r) = horner(den, xi);
      const double q = (leading_factor_x ? xi : 1.0) * horner(num, xi) / den_prev(r);
      err(r) = std::fabs(q - wi) / (relative ? std::fabs(wi) : 1.0);
    }

    // Least squares keeps the last pass; minimax keeps the best one.
    const double score = minimax ? err.maxCoeff() : 0.0;
    if (!minimax || score < best) {
      best = score;
      best_num = std::move(num);
      best_den = std::move(den);
    }
    if (minimax) {
      lawson *= err;
      lawson /= lawson.sum();
    }
  }
  return RationalFit(best_num, best_den, leading_factor_x);
}

double max_relative_residual(const RationalFit& fit, std::span<const double> x,
                             std::span<const double> w) {
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::fmax(worst, std::fabs(rational_fit_eval(fit, x[i]) - w[i]) / std::fabs(w[i]));
  return worst;
}

double max_abs_residual(const RationalFit& fit, std::span<const double> x,
                        std::span<const double> w) {
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::fmax(worst, std::fabs(rational_fit_eval(fit, x[i]) - w[i]));
  return worst;
}

}  // namespace lambertw
