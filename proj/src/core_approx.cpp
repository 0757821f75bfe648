#include "lambertw/core_approx.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lambertw {

namespace {

using boost::multiprecision::cpp_rational;
using Series = std::vector<cpp_rational>;

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Truncated power-series product, keeping terms below `terms`.
Series multiply(const Series& a, const Series& b, std::size_t terms) {
  Series out(terms, cpp_rational(0));
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// sqrt of a series with unit constant term.
Series unit_sqrt(const Series& s, std::size_t terms) {
  Series r(terms, cpp_rational(0));
  r[0] = 1;
  // (r^2)_n = s_n  =>  2 r_n = s_n - sum_{k=1}^{n-1} r_k r_{n-k}
  for (std::size_t n = 1; n < terms; ++n) {
    cpp_rational acc = n < s.size() ? s[n] : cpp_rational(0);
    for (std::size_t k = 1; k < n; ++k) acc -= r[k] * r[n - k];
    r[n] = acc / 2;
  }
  return r;
}

// g(C(p)) truncated, where g has zero constant term.
Series compose(const Series& g, const Series& c, std::size_t terms) {
  Series out(terms, cpp_rational(0));
  Series power(terms, cpp_rational(0));
  power[0] = 1;
  for (std::size_t k = 1; k < g.size() && k < terms; ++k) {
    power = multiply(power, c, terms);
    if (g[k] == 0) continue;
    for (std::size_t i = 0; i < terms; ++i) out[i] += g[k] * power[i];
  }
  return out;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::branch_point_series: return "branch-point-series";
    case RegionKind::rational_fit_1: return "rational-fit-1";
    case RegionKind::rational_fit_2: return "rational-fit-2";
    case RegionKind::asymptotic: return "asymptotic";
    case RegionKind::continued_log: return "continued-log";
  }
  return "unknown";
}

double branch_point_series(Branch branch, double x, int order) {
  if (order < 1 || order > kMaxBranchPointOrder)
    throw std::invalid_argument("branch_point_series: order must be in [1, 9], got " +
                                std::to_string(order));
  if (std::isnan(x)) throw DomainError("branch_point_series: x is NaN");
  if (x < constants::kBranchPointX - constants::kBranchPointSlack)
    throw DomainError("branch_point_series: x = " + format_double(x) +
                      " is below the branch point -1/e");
  double u = one_plus_ex(x);
  if (u < 0) u = 0;
  double p = std::sqrt(2 * u);
  if (branch == Branch::lower) p = -p;

  double acc = kBranchPointCoefficients[static_cast<std::size_t>(order)];
  for (int i = order - 1; i >= 0; --i)
    acc = acc * p + kBranchPointCoefficients[static_cast<std::size_t>(i)];
  return acc;
}

std::vector<cpp_rational> derive_branch_coefficients_exact(int n) {
  if (n < 0 || n > 12)
    throw std::invalid_argument("derive_branch_coefficients: n must be in [0, 12], got " +
                                std::to_string(n));
  const auto terms = static_cast<std::size_t>(n) + 2;

  // 2((y-1)e^y + 1) = sum_{k>=2} 2(k-1)/k! y^k. Dividing by y^2 leaves a
  // series h with h_0 = 1, and p = y sqrt(h(y)) is the map to revert.
  Series h(terms, cpp_rational(0));
  cpp_rational factorial = 1;
  for (std::size_t k = 1; k < terms + 2; ++k) {
    factorial *= static_cast<long>(k);
    if (k >= 2 && k - 2 < terms) h[k - 2] = cpp_rational(2 * static_cast<long>(k - 1)) / factorial;
  }
  const Series root = unit_sqrt(h, terms);
  Series g(terms, cpp_rational(0));  // g(y) = y * root(y)
  for (std::size_t i = 0; i + 1 < terms; ++i) g[i + 1] = root[i];

  // Solve g(C(p)) = p order by order. g_1 = 1, so the p^k coefficient of
  // g(C) is c_k plus terms built from c_1..c_{k-1}.
  Series c(terms, cpp_rational(0));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    const Series composed = compose(g, c, k + 1);
    const cpp_rational target = (k == 1) ? cpp_rational(1) : cpp_rational(0);
    c[k] = (target - composed[k]) / g[1];
  }

  // y = 1 + W, so b_0 = -1 and b_i = c_i.
  std::vector<cpp_rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = -1;
  for (std::size_t i = 1; i < b.size(); ++i) b[i] = c[i];
  return b;
}

std::vector<double> derive_branch_coefficients(int n) {
  const auto exact = derive_branch_coefficients_exact(n);
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& r : exact) out.push_back(static_cast<double>(r));
  return out;
}

double asymptotic_expansion(double a, double b) {
  const double ia = 1 / a;
  return a - b +
         b * ia *
             (1 + ia * (0.5 * (-2 + b) +
                        ia * ((6 + b * (-9 + b * 2)) / 6 +
                              ia * ((-12 + b * (36 + b * (-22 + b * 3))) / 12 +
                                    ia * (60 + b * (-300 + b * (350 + b * (-125 + b * 12)))) /
                                        60))));
}

double asymptotic_series(Branch branch, double x) {
  if (std::isnan(x)) throw DomainError("asymptotic_series: x is NaN");
  if (branch == Branch::principal) {
    if (!(x > 1))
      throw DomainError("asymptotic_series: principal branch needs x > 1, got " +
                        format_double(x));
    const double a = std::log(x);
    return asymptotic_expansion(a, std::log(a));
  }
  if (!(x > constants::kBranchPointX && x < 0))
    throw DomainError("asymptotic_series: lower branch needs -1/e < x < 0, got " +
                      format_double(x));
  const double a = std::log(-x);
  return asymptotic_expansion(a, std::log(-a));
}

RationalFit::RationalFit(std::vector<double> num, std::vector<double> den, bool leading_x)
    : numerator(std::move(num)), denominator(std::move(den)), leading_factor_x(leading_x) {
  if (numerator.empty() || denominator.empty())
    throw std::invalid_argument("RationalFit: empty polynomial");
  if (denominator.front() != 1.0)
    throw std::invalid_argument("RationalFit: denominator constant term must be 1");
}

double rational_fit_eval(const RationalFit& fit, double x) {
  const double den = horner(fit.denominator, x);
  if (den == 0)
    throw DomainError("rational_fit_eval: denominator vanishes at x = " + format_double(x));
  const double ratio = horner(fit.numerator, x) / den;
  return fit.leading_factor_x ? x * ratio : ratio;
}

// Full-precision coefficients; the tests pin their six-decimal truncations.
const RationalFit& principal_fit_1() {
  static const RationalFit fit(
      {1, 5.931375839364438, 11.392205505329132, 7.338883399111118, 0.6534490169919599},
      {1, 6.931373689597704, 16.82349461388016, 16.43072324143226, 5.115235195211697},
      true);
  return fit;
}

const RationalFit& principal_fit_2() {
  static const RationalFit fit(
      {1, 2.4450530707265568, 1.3436642259582265, 0.14844005539759195,
       0.0008047501729129999},
      {1, 3.4447089864860025, 3.2924898573719523, 0.9164600188031222, 0.05306864044833221},
      true);
  return fit;
}

const RationalFit& lower_fit() {
  static const RationalFit fit(
      {-7.814176723907436, 253.88810188892484, 657.9493176902304},
      {1, -60.43958713690808, 99.98567083107612, 682.6073999909428, 962.1784396969866,
       1477.9341280760887},
      false);
  return fit;
}

// Relative-minimax fit of the same form on x in [-0.315, -0.05]
// (lambertw-refit). Only its low end is used.
const RationalFit& lower_bridge_fit() {
  static const RationalFit fit(
      {-7.987271307578216, 303.9930725068815, 789.98348955295796},
      {1, -69.662756059722511, 134.61608629662837, 910.70907395105758, 1421.9912605347504,
       2130.0532256816896},
      false);
  return fit;
}

double continued_log_recursion_wm1(double x, int depth) {
  if (depth < 0) throw std::invalid_argument("continued_log_recursion_wm1: negative depth");
  if (!(x > constants::kBranchPointX && x < 0))
    throw DomainError("continued_log_recursion_wm1: needs -1/e < x < 0, got " +
                      format_double(x));
  const double log_mx = std::log(-x);
  double r = log_mx;
  for (int n = 1; n <= depth; ++n) {
    if (!(r < 0))
      throw std::range_error("continued_log_recursion_wm1: non-negative intermediate at depth " +
                             std::to_string(n - 1));
    r = log_mx - std::log(-r);
  }
  return r;
}

double log_recursion_w0(double x, int depth) {
  if (depth < 0) throw std::invalid_argument("log_recursion_w0: negative depth");
  if (!(x > constants::kE))
    throw DomainError("log_recursion_w0: needs x > e, got " + format_double(x));
  const double log_x = std::log(x);
  double l = log_x;
  for (int n = 1; n <= depth; ++n) l = log_x - std::log(l);
  return l;
}

double exp_recursion_w0(double x, int depth) {
  if (depth < 0) throw std::invalid_argument("exp_recursion_w0: negative depth");
  if (!(x > constants::kBranchPointX && x <= constants::kE))
    throw DomainError("exp_recursion_w0: needs -1/e < x <= e, got " + format_double(x));
  double e = x;
  for (int n = 1; n <= depth; ++n) e = x / std::exp(e);
  return e;
}

}  // namespace lambertw
