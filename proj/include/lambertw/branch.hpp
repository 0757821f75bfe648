#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lambertw {

/// Real branch of the Lambert W function.
///
///   principal (0):  x in [-1/e, inf),  W >= -1
///   lower    (-1):  x in [-1/e, 0),    W <= -1, W -> -inf as x -> 0-
enum class Branch : int { principal = 0, lower = -1 };

/// Thrown when an argument lies outside the domain of an operation. The
/// message names the violated bound.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iteration step would divide by (numerically) zero.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Only 0 and -1 map to a branch; anything else is a DomainError.
inline Branch branch_from_int(int id) {
  if (id == 0) return Branch::principal;
  if (id == -1) return Branch::lower;
  throw DomainError("branch must be 0 or -1, got " + std::to_string(id));
}

constexpr int to_int(Branch b) { return static_cast<int>(b); }

constexpr std::string_view to_string(Branch b) {
  return b == Branch::principal ? "0" : "-1";
}

namespace constants {

/// Nearest double to 1/e. It is slightly larger than 1/e, so -kInvE lies just
/// outside the real domain; see kBranchPointSlack.
inline constexpr double kInvE = 0.36787944117144233;
inline constexpr double kBranchPointX = -kInvE;

/// e split into a double and its rounding remainder, for forming 1 + e*x
/// without losing the digits that cancel near the branch point.
inline constexpr double kE = 2.718281828459045;
inline constexpr double kELow = 1.4456468917292502e-16;

/// Arguments within this distance of kBranchPointX are treated as the branch
/// point itself (4 ulp of 1/e).
inline constexpr double kBranchPointSlack = 4 * 0x1p-54;

}  // namespace constants

/// 1 + e*x evaluated with an fma and the split constant. Accurate to a few
/// ulp of the result even when x is within a few ulp of -1/e.
inline double one_plus_ex(double x) {
  return std::fma(constants::kE, x, 1.0) + constants::kELow * x;
}

}  // namespace lambertw
