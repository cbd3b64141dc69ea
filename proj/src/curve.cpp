#include "qcap/curve.hpp"

#include <algorithm>
#include <cmath>

namespace qcap {

void PiecewiseLinearCurve::validate() const {
  if (knots.size() != values.size())
    throw std::invalid_argument("curve: knot/value count mismatch");
  if (knots.size() < 2) throw std::invalid_argument("curve: needs at least 2 knots");
  for (size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1]))
      throw std::invalid_argument("curve: knots must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("curve: non-finite value");
}

double PiecewiseLinearCurve::evaluate(double x) const {
  if (knots.empty()) throw std::domain_error("curve: empty");
  if (x < knots.front() || x > knots.back())
    throw std::domain_error("curve: evaluation outside knot range");
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  if (it == knots.end()) return values.back();
  const size_t hi = static_cast<size_t>(it - knots.begin());
  if (hi == 0) return values.front();
  const size_t lo = hi - 1;
  const double t = (x - knots[lo]) / (knots[hi] - knots[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

PiecewiseLinearCurve convex_envelope(const PiecewiseLinearCurve& in) {
  in.validate();
  const size_t n = in.knots.size();

  // Monotone chain over points sorted by x (already sorted): keep only
  // nondecreasing slopes.
  std::vector<size_t> hull;
  for (size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      const size_t a = hull[hull.size() - 2];
      const size_t b = hull[hull.size() - 1];
      // b above or on segment a->i means b is not a hull vertex.
      const double cross = (in.knots[b] - in.knots[a]) * (in.values[i] - in.values[a]) -
                           (in.knots[i] - in.knots[a]) * (in.values[b] - in.values[a]);
      if (cross <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  PiecewiseLinearCurve out;
  out.knots.reserve(hull.size());
  out.values.reserve(hull.size());
  for (size_t i : hull) {
    out.knots.push_back(in.knots[i]);
    out.values.push_back(in.values[i]);
  }
  return out;
}

}  // namespace qcap
