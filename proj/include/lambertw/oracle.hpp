#pragma once

#include "lambertw/branch.hpp"

namespace lambertw {

/// Reference value of W_branch(x) by bisection on y e^y = x.
///
/// The bracket is narrowed over the ordered bit patterns of doubles, so it
/// always closes to adjacent doubles in at most 64 halvings, and the sign of
/// y e^y - x is taken in extended precision. Of the two final endpoints the
/// one with the smaller extended-precision residual is returned.
///
/// Shares no code with the approximation or iteration routines. Domain rules
/// match evaluate(): -1 within 4 ulp of the branch point, 0 at x = 0 on the
/// principal branch, DomainError elsewhere outside the domain.
double reference_w(Branch branch, double x);

/// |y e^y - x| evaluated in long double.
long double reference_residual(double x, double y);

}  // namespace lambertw
