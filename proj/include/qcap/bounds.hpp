#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcap/curve.hpp"
#include "qcap/parallel.hpp"

namespace qcap {

/// Sampled (parameter, value) sequence for one named bound; values in qubits
/// (or key bits) per channel use. Raw values are not clamped at 0.
struct BoundCurve {
  std::string name;
  std::string parameter;  // "p" or "q"
  PiecewiseLinearCurve samples;
};

double hashing_lower(double p);        // 1 - H(p) - p log2 3
double dephasing_upper(double p);      // 1 - H(p)
double no_cloning_line(double p);      // 1 - 4p
double ad_gamma(double p);             // 4 sqrt(1-p)(1 - sqrt(1-p))
double ad_upper(double p);             // H((1-gamma)/2) - H(gamma/2)

/// H((1 + sin u sin v)/2) - H((1 + cos u cos v)/2); symmetric in (u,v).
double delta_objective(double u, double v);

struct DeltaOptions {
  int grid_points = 2001;
  bool restrict_degradable = true;  // enforce |sin v| <= |cos u|
};

struct DeltaResult {
  double value = 0.0;
  double argmin_u = 0.0;
  double argmin_v = 0.0;
  bool feasible = false;
};

/// Minimize delta_objective over cos^2(u/2) cos^2(v/2) = 1-p, u in
/// [0, 2 acos sqrt(1-p)], restricted (by default) to the degradable region.
/// Grid scan plus golden-section refinement; smallest u wins among ties.
DeltaResult delta(double p, const DeltaOptions& options = {});

double bb84_upper(double q);  // H(1/2 - 2q(1-q)) - H(2q(1-q))

/// Uniform sampling of fn on [lo, hi] with exact endpoints.
BoundCurve sample_curve(const std::function<double(double)>& fn, const std::string& name,
                        const std::string& parameter, double lo, double hi, int steps,
                        ExecPolicy policy = ExecPolicy::Parallel);

/// Lower convex envelope of the pointwise minimum over the merged knot set.
BoundCurve convex_hull_curves(const std::vector<BoundCurve>& curves,
                              const std::string& name);

/// co[Delta(p), 1-4p] sampled on the given grid.
BoundCurve theorem6_bound(const std::vector<double>& grid, const DeltaOptions& options = {},
                          ExecPolicy policy = ExecPolicy::Parallel);

/// co[1-H(p), ad_upper(p), 1-4p] sampled on the given grid.
BoundCurve corollary7_bound(const std::vector<double>& grid,
                            ExecPolicy policy = ExecPolicy::Parallel);

/// Grid with exact endpoints: x_i = (lo*(n-1-i) + hi*i)/(n-1).
std::vector<double> uniform_grid(double lo, double hi, int steps);

/// All depolarizing-channel columns over one grid; the heavy data-parallel
/// kernel behind the CSV emitter and the benchmark.
struct DepBoundTable {
  std::vector<double> p, hashing, one_minus_hp, one_minus_4p, ad_bound, delta_min,
      thm6_hull, cor7_hull;
};

DepBoundTable depolarizing_bound_table(double pmin, double pmax, int steps,
                                       const DeltaOptions& options = {},
                                       ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace qcap
