#pragma once

// Closed-form inverses of two profile functions used in cosmic-ray physics,
// both expressed through the two real branches of W.

namespace lambertw::physics {

/// Un-normalised Moyal function exp(-(x + e^-x) / 2). Peaks at x = 0 with
/// value e^-1/2.
double moyal(double x);

/// Side of the Moyal peak. plus is the right tail (x > 0, principal branch),
/// minus the left one (x < 0, lower branch).
enum class Side { plus, minus };

/// x with moyal(x) = y, for 0 < y <= e^-1/2:  W(-y^2) - 2 ln y.
double moyal_inverse(double y, Side side);

/// Three-parameter Gaisser-Hillas shape. Requires lambda > 0, x_max > x0.
struct GaisserHillasParams {
  double x0;
  double x_max;
  double lambda;

  /// Throws DomainError when the invariants do not hold.
  static GaisserHillasParams make(double x0, double x_max, double lambda);
};

struct Rescaled {
  double x;
  double x_max;
};

/// ((X - X0) / lambda, (X_max - X0) / lambda).
Rescaled gh_rescale(double depth, const GaisserHillasParams& p);

/// One-parameter form g(x; x_max) = (x / x_max)^x_max e^(x_max - x), with
/// maximum 1 at x = x_max. Requires x >= 0 and x_max > 0.
double gaisser_hillas(double x, double x_max);

/// Three-parameter form G(X; X0, X_max, lambda) = g((X - X0)/lambda; x_max).
double gaisser_hillas(double depth, const GaisserHillasParams& p);

struct Crossings {
  double left;   // <= x_max
  double right;  // >= x_max
};

/// Both x with g(x; x_max) = y, 0 < y <= 1.
Crossings gh_inverse(double y, double x_max);

/// Both depths X with G(X) = y, by rescaling and mapping back X = lambda x + X0.
Crossings gh_inverse(double y, const GaisserHillasParams& p);

}  // namespace lambertw::physics
