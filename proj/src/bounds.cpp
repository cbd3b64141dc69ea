#include "qcap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qcap/channel.hpp"
#include "qcap/entropy.hpp"

namespace qcap {

namespace {

void check_unit_interval(double x, const char* who) {
  if (x < 0.0 || x > 1.0) throw std::domain_error(std::string(who) + ": argument outside [0,1]");
}

const double kLog2Of3 = std::log2(3.0);

}  // namespace

double hashing_lower(double p) {
  check_unit_interval(p, "hashing_lower");
  return 1.0 - binary_entropy(p) - p * kLog2Of3;
}

double dephasing_upper(double p) {
  check_unit_interval(p, "dephasing_upper");
  return 1.0 - binary_entropy(p);
}

double no_cloning_line(double p) { return 1.0 - 4.0 * p; }

double ad_gamma(double p) {
  check_unit_interval(p, "ad_gamma");
  const double root = std::sqrt(1.0 - p);
  return 4.0 * root * (1.0 - root);
}

double ad_upper(double p) {
  const double gamma = ad_gamma(p);
  return binary_entropy(0.5 * (1.0 - gamma)) - binary_entropy(0.5 * gamma);
}

double delta_objective(double u, double v) {
  return binary_entropy(0.5 * (1.0 + std::sin(u) * std::sin(v))) -
         binary_entropy(0.5 * (1.0 + std::cos(u) * std::cos(v)));
}

namespace {

// v(u) on the constraint cos^2(u/2) cos^2(v/2) = 1-p.
double constraint_v(double p, double u) {
  const double cu2 = std::cos(0.5 * u);
  double c = (1.0 - p) / (cu2 * cu2);
  if (c > 1.0) c = 1.0;
  return 2.0 * std::acos(std::sqrt(c));
}

}  // namespace

DeltaResult delta(double p, const DeltaOptions& options) {
  if (p < 0.0 || p >= 1.0) throw std::domain_error("delta: p outside [0,1)");
  if (options.grid_points < 2) throw std::invalid_argument("delta: grid too small");

  const double u_max = 2.0 * std::acos(std::sqrt(1.0 - p));
  const int n = options.grid_points;

  auto feasible_at = [&](double u) {
    return !options.restrict_degradable || n_uv_degradable(u, constraint_v(p, u));
  };
  auto value_at = [&](double u) {
    if (!feasible_at(u)) return std::numeric_limits<double>::infinity();
    return delta_objective(u, constraint_v(p, u));
  };

  double best_u = -1.0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double u = u_max * i / (n - 1);
    const double val = value_at(u);
    if (val < best_value) {  // strict: smallest u wins among equal minima
      best_value = val;
      best_u = u;
    }
  }
  // The u=0 (dephasing) point is always in the degradable region, so the
  // feasible set cannot be empty.
  if (!(best_value < std::numeric_limits<double>::infinity()))
    throw std::logic_error("delta: empty feasible set");

  // Golden-section refinement inside the bracketing grid cells.
  const double h = u_max / (n - 1);
  double lo = std::max(0.0, best_u - h);
  double hi = std::min(u_max, best_u + h);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = value_at(x1);
  double f2 = value_at(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = value_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = value_at(x2);
    }
  }
  const double u_refined = 0.5 * (lo + hi);
  const double refined = value_at(u_refined);

  DeltaResult result;
  if (refined < best_value) {
    best_value = refined;
    best_u = u_refined;
  }
  result.value = best_value;
  result.argmin_u = best_u;
  result.argmin_v = constraint_v(p, best_u);
  result.feasible = true;
  return result;
}

double bb84_upper(double q) {
  if (q < 0.0 || q > 0.5) throw std::domain_error("bb84_upper: q outside [0,1/2]");
  const double x = 2.0 * q * (1.0 - q);
  return binary_entropy(0.5 - x) - binary_entropy(x);
}

std::vector<double> uniform_grid(double lo, double hi, int steps) {
  if (steps < 2) throw std::invalid_argument("uniform_grid: steps must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("uniform_grid: lo must be < hi");
  std::vector<double> grid(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i)
    grid[static_cast<size_t>(i)] = (lo * (steps - 1 - i) + hi * i) / (steps - 1);
  return grid;
}

BoundCurve sample_curve(const std::function<double(double)>& fn, const std::string& name,
                        const std::string& parameter, double lo, double hi, int steps,
                        ExecPolicy policy) {
  BoundCurve curve;
  curve.name = name;
  curve.parameter = parameter;
  curve.samples.knots = uniform_grid(lo, hi, steps);
  curve.samples.values.resize(curve.samples.knots.size());
  parallel_for(policy, steps, [&](std::int64_t i) {
    curve.samples.values[static_cast<size_t>(i)] =
        fn(curve.samples.knots[static_cast<size_t>(i)]);
  });
  curve.samples.validate();
  return curve;
}

BoundCurve convex_hull_curves(const std::vector<BoundCurve>& curves,
                              const std::string& name) {
  if (curves.empty()) throw std::invalid_argument("convex_hull_curves: no curves");
  std::set<double> merged;
  for (const auto& c : curves) {
    c.samples.validate();
    merged.insert(c.samples.knots.begin(), c.samples.knots.end());
  }
  const double lo = std::max_element(curves.begin(), curves.end(),
                                     [](const BoundCurve& a, const BoundCurve& b) {
                                       return a.samples.knots.front() < b.samples.knots.front();
                                     })
                        ->samples.knots.front();
  const double hi = std::min_element(curves.begin(), curves.end(),
                                     [](const BoundCurve& a, const BoundCurve& b) {
                                       return a.samples.knots.back() < b.samples.knots.back();
                                     })
                        ->samples.knots.back();
  if (!(lo < hi))
    throw std::invalid_argument("convex_hull_curves: curves do not share a domain");

  PiecewiseLinearCurve min_curve;
  for (double x : merged) {
    if (x < lo || x > hi) continue;
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : curves) m = std::min(m, c.samples.evaluate(x));
    min_curve.knots.push_back(x);
    min_curve.values.push_back(m);
  }

  BoundCurve out;
  out.name = name;
  out.parameter = curves.front().parameter;
  out.samples = convex_envelope(min_curve);
  return out;
}

BoundCurve theorem6_bound(const std::vector<double>& grid, const DeltaOptions& options,
                          ExecPolicy policy) {
  PiecewiseLinearCurve min_curve;
  min_curve.knots = grid;
  min_curve.values.resize(grid.size());
  parallel_for(policy, static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
    const double p = grid[static_cast<size_t>(i)];
    min_curve.values[static_cast<size_t>(i)] =
        std::min(delta(p, options).value, no_cloning_line(p));
  });
  BoundCurve out;
  out.name = "thm6_hull";
  out.parameter = "p";
  out.samples = convex_envelope(min_curve);
  return out;
}

BoundCurve corollary7_bound(const std::vector<double>& grid, ExecPolicy policy) {
  PiecewiseLinearCurve min_curve;
  min_curve.knots = grid;
  min_curve.values.resize(grid.size());
  parallel_for(policy, static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
    const double p = grid[static_cast<size_t>(i)];
    min_curve.values[static_cast<size_t>(i)] =
        std::min({dephasing_upper(p), ad_upper(p), no_cloning_line(p)});
  });
  BoundCurve out;
  out.name = "cor7_hull";
  out.parameter = "p";
  out.samples = convex_envelope(min_curve);
  return out;
}

DepBoundTable depolarizing_bound_table(double pmin, double pmax, int steps,
                                       const DeltaOptions& options, ExecPolicy policy) {
  DepBoundTable table;
  table.p = uniform_grid(pmin, pmax, steps);
  const size_t n = table.p.size();
  table.hashing.resize(n);
  table.one_minus_hp.resize(n);
  table.one_minus_4p.resize(n);
  table.ad_bound.resize(n);
  table.delta_min.resize(n);
  parallel_for(policy, static_cast<std::int64_t>(n), [&](std::int64_t i) {
    const double p = table.p[static_cast<size_t>(i)];
    table.hashing[static_cast<size_t>(i)] = hashing_lower(p);
    table.one_minus_hp[static_cast<size_t>(i)] = dephasing_upper(p);
    table.one_minus_4p[static_cast<size_t>(i)] = no_cloning_line(p);
    table.ad_bound[static_cast<size_t>(i)] = ad_upper(p);
    table.delta_min[static_cast<size_t>(i)] = delta(p, options).value;
  });

  PiecewiseLinearCurve thm6_min{table.p, {}};
  thm6_min.values.resize(n);
  PiecewiseLinearCurve cor7_min{table.p, {}};
  cor7_min.values.resize(n);
  for (size_t i = 0; i < n; ++i) {
    thm6_min.values[i] = std::min(table.delta_min[i], table.one_minus_4p[i]);
    cor7_min.values[i] =
        std::min({table.one_minus_hp[i], table.ad_bound[i], table.one_minus_4p[i]});
  }
  const PiecewiseLinearCurve thm6 = convex_envelope(thm6_min);
  const PiecewiseLinearCurve cor7 = convex_envelope(cor7_min);
  table.thm6_hull.resize(n);
  table.cor7_hull.resize(n);
  for (size_t i = 0; i < n; ++i) {
    table.thm6_hull[i] = thm6.evaluate(table.p[i]);
    table.cor7_hull[i] = cor7.evaluate(table.p[i]);
  }
  return table;
}

}  // namespace qcap
