#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcap/degrading.hpp"
#include "qcap/entropy.hpp"
#include "test_support.hpp"

using namespace qcap;

TEST_CASE("degrading map of the identity is trace-and-replace") {
  const DegradingResult r = find_degrading_map(identity_channel(2));
  REQUIRE(r.feasible);
  CHECK(r.residual < 1e-7);
  // the complementary channel has a 1-dimensional output, so D is forced
  // to be the full trace
  REQUIRE(r.map.has_value());
  CHECK(r.map->out_dim == 1);
  CHECK(validate_cptp(*r.map).ok);
}

TEST_CASE("amplitude damping is degradable up to gamma = 1/2") {
  for (double gamma : {0.1, 0.3, 0.5}) {
    const DegradingResult r = find_degrading_map(amplitude_damping(gamma));
    REQUIRE(r.feasible);
    CHECK(r.residual < 1e-7);
    REQUIRE(r.map.has_value());
    CHECK(validate_cptp(*r.map, 1e-7).ok);
    // closed form: the degrading map is amplitude damping with
    // gamma_D = (1 - 2 gamma)/(1 - gamma)
    const double gamma_d = (1.0 - 2.0 * gamma) / (1.0 - gamma);
    CHECK(choi_distance(*r.map, amplitude_damping(gamma_d)) < 1e-6);
    CHECK(choi_distance(compose(*r.map, amplitude_damping(gamma)),
                        complementary(amplitude_damping(gamma))) < 1e-7);
  }
}

TEST_CASE("amplitude damping above gamma = 1/2 reports infeasible") {
  for (double gamma : {0.7, 0.9}) {
    const DegradingResult r = find_degrading_map(amplitude_damping(gamma));
    CHECK_FALSE(r.feasible);
    CHECK(r.residual > 1e-3);  // the residual stalls well above tolerance
  }
}

TEST_CASE("in-region n_uv channels are degradable") {
  const DegradingResult r = find_degrading_map(n_uv(0.3, 0.4));
  REQUIRE(r.feasible);
  CHECK(r.residual < 1e-7);
}

TEST_CASE("find_intertwiner through the identity returns the target") {
  const KrausChannel target = amplitude_damping(0.3);
  const DegradingResult r = find_intertwiner(identity_channel(2), target);
  REQUIRE(r.feasible);
  CHECK(choi_distance(*r.map, target) < 1e-7);
}

TEST_CASE("pad_output embeds into leading rows") {
  const KrausChannel padded = pad_output(amplitude_damping(0.2), 4);
  CHECK(padded.out_dim == 4);
  CHECK(validate_cptp(padded).ok);
  Rng rng(31);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix big = apply(padded, rho);
  const DensityMatrix small = apply(amplitude_damping(0.2), rho);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(std::abs(big(r, c) - small(r, c)) < 1e-14);
  for (int r = 2; r < 4; ++r) CHECK(std::abs(big(r, r)) < 1e-14);
}

TEST_CASE("no-cloning extension is a swap-symmetric isometry") {
  Rng rng(32);
  for (int trial = 0; trial < 3; ++trial) {
    const KrausChannel ch = test::random_qubit_channel(2 + trial, rng);
    const NoCloningExtension ext = no_cloning_extension(ch);
    CHECK(distance(ext.isometry.v.dagger() * ext.isometry.v,
                   ComplexMatrix::identity(2)) < 1e-10);
    CHECK(validate_cptp(ext.extension).ok);
    CHECK(validate_cptp(ext.mirror).ok);
    CHECK(choi_distance(ext.extension, ext.mirror) < 1e-10);
  }

  const NoCloningExtension ad = no_cloning_extension(amplitude_damping(0.7));
  CHECK(distance(ad.isometry.v.dagger() * ad.isometry.v, ComplexMatrix::identity(2)) <
        1e-10);
}

TEST_CASE("no-cloning extension degrades back to an antidegradable channel") {
  // depolarizing(0.3) is antidegradable, so a reduction R with
  // R o T = ch (padded into F1) must exist.
  const KrausChannel ch = depolarizing(0.3);
  const NoCloningExtension ext = no_cloning_extension(ch);
  const KrausChannel target = pad_output(ch, ext.pad_dim);
  const DegradingResult r = find_intertwiner(ext.extension, target, 1e-6, 4000);
  CHECK(r.feasible);
  CHECK(r.residual < 1e-6);
}
