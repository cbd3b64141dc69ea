#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcap/bounds.hpp"
#include "qcap/channel.hpp"
#include "qcap/entropy.hpp"

using namespace qcap;

namespace {

// Brute-force oracle: dense scan of the constraint curve, no refinement.
double delta_oracle(double p, int points) {
  const double u_max = 2.0 * std::acos(std::sqrt(1.0 - p));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double u = u_max * i / (points - 1);
    const double cu2 = std::cos(0.5 * u);
    double c = (1.0 - p) / (cu2 * cu2);
    if (c > 1.0) c = 1.0;
    const double v = 2.0 * std::acos(std::sqrt(c));
    if (std::abs(std::sin(v)) > std::abs(std::cos(u))) continue;
    best = std::min(best, delta_objective(u, v));
  }
  return best;
}

}  // namespace

TEST_CASE("closed-form bound endpoints") {
  CHECK(hashing_lower(0.0) == doctest::Approx(1.0));
  // frozen from a 30-digit evaluation of 1 - H(0.1) - 0.1 log2 3
  CHECK(hashing_lower(0.1) == doctest::Approx(0.372508156338603161).epsilon(1e-13));
  CHECK(dephasing_upper(0.0) == doctest::Approx(1.0));
  CHECK(dephasing_upper(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(no_cloning_line(0.0) == doctest::Approx(1.0));
  CHECK(no_cloning_line(0.25) == doctest::Approx(0.0));
  CHECK(no_cloning_line(0.3) == doctest::Approx(-0.2));
  CHECK(ad_upper(0.0) == doctest::Approx(1.0));
  // frozen: gamma(0.1) = 0.194733192202055198, H((1-g)/2) - H(g/2)
  CHECK(ad_upper(0.1) == doctest::Approx(0.511878329932865172).epsilon(1e-12));
  CHECK_THROWS_AS(hashing_lower(-0.1), std::domain_error);
  CHECK_THROWS_AS(ad_upper(1.2), std::domain_error);
}

TEST_CASE("delta objective symmetry and special points") {
  CHECK(delta_objective(0.0, 0.0) == doctest::Approx(1.0));
  for (auto [u, v] : {std::pair{0.3, 0.8}, std::pair{1.1, 0.2}})
    CHECK(delta_objective(u, v) == delta_objective(v, u));  // exact swap symmetry

  // dephasing: u = 0, cos^2(v/2) = 1-p
  for (double p : {0.05, 0.2, 0.4}) {
    const double v = 2.0 * std::acos(std::sqrt(1.0 - p));
    CHECK(delta_objective(0.0, v) == doctest::Approx(dephasing_upper(p)).epsilon(1e-12));
  }
  // amplitude damping: u = v with cos^2(u/2) = sqrt(1-p)
  for (double p : {0.05, 0.2, 0.4}) {
    const double u = 2.0 * std::acos(std::sqrt(std::sqrt(1.0 - p)));
    CHECK(delta_objective(u, u) == doctest::Approx(ad_upper(p)).epsilon(1e-12));
  }
}

TEST_CASE("delta minimization") {
  const DeltaResult at_zero = delta(0.0);
  CHECK(at_zero.value == doctest::Approx(1.0));
  CHECK(at_zero.argmin_u == doctest::Approx(0.0).epsilon(1e-9));

  for (double p : {0.05, 0.1, 0.2, 0.25}) {
    const DeltaResult r = delta(p);
    CHECK(r.feasible);
    // constraint satisfied at the reported argmin
    const double cu = std::cos(r.argmin_u / 2), cv = std::cos(r.argmin_v / 2);
    CHECK(cu * cu * cv * cv == doctest::Approx(1.0 - p).epsilon(1e-9));
    // degradable region
    CHECK(std::abs(std::sin(r.argmin_v)) <= std::abs(std::cos(r.argmin_u)) + 1e-9);
    // internal consistency: value equals the objective at the argmin
    CHECK(r.value == doctest::Approx(delta_objective(r.argmin_u, r.argmin_v))
                         .epsilon(1e-12));
    // dominated by the special cases
    CHECK(r.value <= dephasing_upper(p) + 1e-9);
    CHECK(r.value <= ad_upper(p) + 1e-9);
  }

  CHECK(delta(0.1).value == doctest::Approx(delta_oracle(0.1, 100001)).epsilon(1e-6));
  CHECK(delta(0.22).value == doctest::Approx(delta_oracle(0.22, 100001)).epsilon(1e-6));

  CHECK_THROWS_AS(delta(1.0), std::domain_error);
  CHECK_THROWS_AS(delta(-0.05), std::domain_error);
}

TEST_CASE("unrestricted delta can only be lower") {
  DeltaOptions unrestricted;
  unrestricted.restrict_degradable = false;
  for (double p : {0.1, 0.2, 0.28})
    CHECK(delta(p, unrestricted).value <= delta(p).value + 1e-12);
}

TEST_CASE("bb84 upper bound") {
  CHECK(bb84_upper(0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(bb84_upper(0.6), std::domain_error);

  // analytic zero at (2 - sqrt 2)/4
  const double qstar = (2.0 - std::sqrt(2.0)) / 4.0;
  CHECK(std::abs(bb84_upper(qstar)) < 1e-12);

  // nonincreasing on [0, 1/4]
  double prev = bb84_upper(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double q = 0.25 * i / 1000.0;
    const double cur = bb84_upper(q);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("uniform grid endpoints are exact") {
  const std::vector<double> g = uniform_grid(0.0, 0.3, 601);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 0.3);
  CHECK(g.size() == 601);
  CHECK(g[500] == 0.25);  // (500 * 0.3) / 600 lands exactly on 0.25
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(0.5, 0.5, 10), std::invalid_argument);
}

TEST_CASE("sample_curve basics") {
  const BoundCurve c = sample_curve([](double) { return 0.7; }, "const", "p", 0.0, 1.0, 2);
  CHECK(c.samples.knots.size() == 2);
  CHECK(c.samples.evaluate(0.5) == doctest::Approx(0.7));
  const BoundCurve h = sample_curve([](double p) { return hashing_lower(p); }, "hash",
                                    "p", 0.0, 0.25, 51);
  CHECK(h.samples.knots.front() == 0.0);
  CHECK(h.samples.knots.back() == 0.25);
  CHECK(h.samples.values.front() == doctest::Approx(1.0));
}

TEST_CASE("convex_hull_curves") {
  const BoundCurve line =
      sample_curve([](double p) { return no_cloning_line(p); }, "line", "p", 0.0, 0.3, 101);
  const BoundCurve hull_of_one = convex_hull_curves({line}, "hull");
  for (double p : {0.0, 0.11, 0.3})
    CHECK(hull_of_one.samples.evaluate(p) ==
          doctest::Approx(line.samples.evaluate(p)).epsilon(1e-12));

  const BoundCurve deph =
      sample_curve([](double p) { return dephasing_upper(p); }, "deph", "p", 0.0, 0.3, 101);
  const BoundCurve hull = convex_hull_curves({line, deph}, "hull");
  for (size_t i = 0; i < line.samples.knots.size(); ++i) {
    const double p = line.samples.knots[i];
    CHECK(hull.samples.evaluate(p) <= line.samples.values[i] + 1e-12);
    CHECK(hull.samples.evaluate(p) <= deph.samples.values[i] + 1e-12);
  }

  CHECK_THROWS_AS(convex_hull_curves({}, "hull"), std::invalid_argument);
}

TEST_CASE("theorem 6 and corollary 7 hulls") {
  const std::vector<double> grid = uniform_grid(0.0, 0.3, 301);
  const BoundCurve thm6 = theorem6_bound(grid);
  const BoundCurve cor7 = corollary7_bound(grid);

  CHECK(thm6.samples.evaluate(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cor7.samples.evaluate(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(thm6.samples.evaluate(0.25) <= 1e-12);
  CHECK(cor7.samples.evaluate(0.25) <= 1e-12);

  for (double p : grid) {
    // theorem 6 is the tighter statement
    CHECK(thm6.samples.evaluate(p) <= cor7.samples.evaluate(p) + 1e-6);
    // hull below each constituent
    CHECK(thm6.samples.evaluate(p) <= no_cloning_line(p) + 1e-12);
    CHECK(cor7.samples.evaluate(p) <= std::min(dephasing_upper(p), no_cloning_line(p)) + 1e-12);
  }

  // the new middle line sits strictly below the top pair away from p = 0
  CHECK(cor7.samples.evaluate(0.1) <
        std::min(dephasing_upper(0.1), no_cloning_line(0.1)) - 1e-3);

  // left of p = 0.25 the hull rides the 1-4p line: slope -4
  const auto& knots = thm6.samples.knots;
  for (size_t i = 1; i < knots.size(); ++i) {
    if (knots[i - 1] < 0.23 || knots[i] > 0.25) continue;
    const double slope = (thm6.samples.values[i] - thm6.samples.values[i - 1]) /
                         (knots[i] - knots[i - 1]);
    CHECK(slope == doctest::Approx(-4.0).epsilon(1e-6));
  }
}

TEST_CASE("depolarizing bound table is policy independent") {
  const DepBoundTable serial =
      depolarizing_bound_table(0.0, 0.3, 61, DeltaOptions{}, ExecPolicy::Serial);
  const DepBoundTable parallel =
      depolarizing_bound_table(0.0, 0.3, 61, DeltaOptions{}, ExecPolicy::Parallel);
  REQUIRE(serial.p.size() == parallel.p.size());
  for (size_t i = 0; i < serial.p.size(); ++i) {
    CHECK(serial.delta_min[i] == parallel.delta_min[i]);
    CHECK(serial.thm6_hull[i] == parallel.thm6_hull[i]);
    CHECK(serial.cor7_hull[i] == parallel.cor7_hull[i]);
  }
}

TEST_CASE("bound ordering on a coarse grid") {
  const DepBoundTable t =
      depolarizing_bound_table(0.0, 0.25, 101, DeltaOptions{}, ExecPolicy::Parallel);
  for (size_t i = 0; i < t.p.size(); ++i) {
    CHECK(t.hashing[i] <= t.thm6_hull[i] + 1e-6);
    CHECK(t.thm6_hull[i] <= t.cor7_hull[i] + 1e-6);
    CHECK(t.cor7_hull[i] <= std::min(t.one_minus_hp[i], t.one_minus_4p[i]) + 1e-6);
  }
}
