#pragma once

#include <vector>

#include <stdexcept>

namespace qcap {

/// Piecewise-linear function given by strictly increasing knots.
struct PiecewiseLinearCurve {
  std::vector<double> knots;
  std::vector<double> values;

  void validate() const;

  /// Linear interpolation; throws std::domain_error outside [front, back].
  double evaluate(double x) const;
};

/// Lower convex hull of the knot set (monotone chain). Pointwise <= input,
/// convex, and agrees with the input at the first and last knot.
PiecewiseLinearCurve convex_envelope(const PiecewiseLinearCurve& in);

}  // namespace qcap
