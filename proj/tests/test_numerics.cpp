#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcap/curve.hpp"
#include "qcap/eig.hpp"
#include "qcap/entropy.hpp"
#include "qcap/rng.hpp"
#include "test_support.hpp"

using namespace qcap;
using test::basis_projector;
using test::bell_state;
using test::maximally_mixed;

TEST_CASE("binary entropy closed form") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // frozen from a 30-digit evaluation of -x log2 x - (1-x) log2(1-x)
  CHECK(binary_entropy(0.1) == doctest::Approx(0.468995593589281221).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("binary entropy symmetry and maximum") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform();
    CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-12));
    CHECK(binary_entropy(x) <= 1.0 + 1e-15);
  }
}

TEST_CASE("von Neumann entropy basics") {
  CHECK(von_neumann_entropy(maximally_mixed(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(basis_projector(4, 2)) == doctest::Approx(0.0).epsilon(1e-12));
  DensityMatrix rho(2, 2);
  rho(0, 0) = 0.25;
  rho(1, 1) = 0.75;
  // equals binary_entropy(0.25), frozen from the 30-digit evaluation
  CHECK(von_neumann_entropy(rho) == doctest::Approx(0.811278124459132864).epsilon(1e-13));
}

TEST_CASE("von Neumann entropy validation") {
  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;  // not Hermitian
  bad(0, 0) = 0.5;
  bad(1, 1) = 0.5;
  CHECK_THROWS_AS(von_neumann_entropy(bad), std::invalid_argument);
  DensityMatrix traceless = maximally_mixed(2);
  traceless *= 0.9;
  CHECK_THROWS_AS(von_neumann_entropy(traceless), std::invalid_argument);
}

TEST_CASE("entropy unitary invariance and additivity") {
  Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const int d = (i % 2) ? 4 : 2;
    const DensityMatrix rho = random_density(d, rng);
    const ComplexMatrix u = random_unitary(d, rng);
    CHECK(von_neumann_entropy(u * rho * u.dagger()) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix a = random_density(2, rng);
    const DensityMatrix b = random_density(3, rng);
    CHECK(von_neumann_entropy(kron(a, b)) ==
          doctest::Approx(von_neumann_entropy(a) + von_neumann_entropy(b)).epsilon(1e-9));
  }
}

TEST_CASE("hermitian_eig diagonal and identity") {
  const auto id = hermitian_eig(ComplexMatrix::identity(5));
  for (double lam : id.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  const auto spec = hermitian_eig(d);
  CHECK(spec.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(spec.eigenvalues[1] == doctest::Approx(3.0));
}

TEST_CASE("hermitian_eig reconstruction on random matrices") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8;
    const ComplexMatrix m = random_hermitian(n, rng);
    const auto spec = hermitian_eig(m);

    // ascending eigenvalues
    for (size_t i = 1; i < spec.eigenvalues.size(); ++i)
      CHECK(spec.eigenvalues[i] >= spec.eigenvalues[i - 1]);

    // unitarity of the eigenvector matrix
    const ComplexMatrix vtv = spec.eigenvectors.dagger() * spec.eigenvectors;
    CHECK(distance(vtv, ComplexMatrix::identity(n)) < 1e-10);

    // V Lambda V^dag = M
    ComplexMatrix lambda(n, n);
    for (int i = 0; i < n; ++i) lambda(i, i) = spec.eigenvalues[i];
    const ComplexMatrix recon = spec.eigenvectors * lambda * spec.eigenvectors.dagger();
    CHECK(distance(recon, m) < 1e-10);

    // trace identity
    double sum = 0.0;
    for (double lam : spec.eigenvalues) sum += lam;
    CHECK(sum == doctest::Approx(m.trace().real()).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eig error paths") {
  ComplexMatrix notherm(2, 2);
  notherm(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(notherm), std::invalid_argument);

  Rng rng(14);
  const ComplexMatrix m = random_hermitian(6, rng);
  try {
    hermitian_eig(m, 1e-12, 0);  // zero sweep budget cannot converge
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.residual > 0.0);
  }
}

TEST_CASE("partial trace recovers product factors") {
  Rng rng(15);
  const DensityMatrix a = random_density(2, rng);
  const DensityMatrix b = random_density(3, rng);
  const DensityMatrix joint = kron(a, b);
  CHECK(distance(partial_trace(joint, {2, 3}, {0}), a) < 1e-12);
  CHECK(distance(partial_trace(joint, {2, 3}, {1}), b) < 1e-12);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const DensityMatrix bell = bell_state();
  CHECK(distance(partial_trace(bell, {2, 2}, {0}), maximally_mixed(2)) < 1e-12);
  CHECK(distance(partial_trace(bell, {2, 2}, {1}), maximally_mixed(2)) < 1e-12);
}

TEST_CASE("partial trace preserves trace and validates dims") {
  Rng rng(16);
  const DensityMatrix rho = random_density(6, rng);
  const DensityMatrix reduced = partial_trace(rho, {2, 3}, {0});
  CHECK(reduced.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  const DensityMatrix scalar = partial_trace(reduced, {2}, {});
  CHECK(scalar.rows() == 1);
  CHECK(scalar(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {0}), std::invalid_argument);
}

TEST_CASE("conditional entropy special cases") {
  // classical-quantum state with fixed sigma: H(V|B) = H({p_i})
  Rng rng(17);
  const DensityMatrix sigma = random_density(2, rng);
  ComplexMatrix p0(2, 2), p1(2, 2);
  p0(0, 0) = 0.3;
  p1(1, 1) = 0.7;
  const DensityMatrix cq = kron(p0, sigma) + kron(p1, sigma);
  CHECK(conditional_entropy(cq, {2, 2}, {1}) ==
        doctest::Approx(binary_entropy(0.3)).epsilon(1e-10));

  // pure bipartite: H(A|B) = -S(B)
  const DensityMatrix bell = bell_state();
  CHECK(conditional_entropy(bell, {2, 2}, {1}) == doctest::Approx(-1.0).epsilon(1e-10));

  const ComplexMatrix psi = purification(random_density(3, rng));
  DensityMatrix pure(psi.rows(), psi.rows());
  for (int r = 0; r < psi.rows(); ++r)
    for (int c = 0; c < psi.rows(); ++c) pure(r, c) = psi(r, 0) * std::conj(psi(c, 0));
  const double s_marginal = von_neumann_entropy(partial_trace(pure, {3, 3}, {1}));
  CHECK(conditional_entropy(pure, {3, 3}, {1}) ==
        doctest::Approx(-s_marginal).epsilon(1e-9));
}

TEST_CASE("purification reproduces the state") {
  Rng rng(18);
  const DensityMatrix rho = random_density(4, rng);
  const ComplexMatrix psi = purification(rho);
  DensityMatrix joint(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) joint(r, c) = psi(r, 0) * std::conj(psi(c, 0));
  CHECK(distance(partial_trace(joint, {4, 4}, {1}), rho) < 1e-10);
}

TEST_CASE("curve evaluation interpolates") {
  PiecewiseLinearCurve c{{0.0, 1.0, 2.0}, {0.0, 2.0, 0.0}};
  CHECK(c.evaluate(0.5) == doctest::Approx(1.0));
  CHECK(c.evaluate(1.5) == doctest::Approx(1.0));
  CHECK(c.evaluate(2.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(c.evaluate(2.5), std::domain_error);
}

TEST_CASE("convex envelope leaves convex input unchanged") {
  PiecewiseLinearCurve line;
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.03 * i;
    line.knots.push_back(p);
    line.values.push_back(1.0 - 4.0 * p);
  }
  const PiecewiseLinearCurve env = convex_envelope(line);
  CHECK(env.knots.front() == line.knots.front());
  CHECK(env.knots.back() == line.knots.back());
  for (int i = 0; i <= 10; ++i)
    CHECK(env.evaluate(line.knots[i]) == doctest::Approx(line.values[i]).epsilon(1e-12));
}

TEST_CASE("convex envelope of a tent is the chord") {
  const PiecewiseLinearCurve tent{{0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}};
  const PiecewiseLinearCurve env = convex_envelope(tent);
  CHECK(env.knots.size() == 2);
  CHECK(env.evaluate(0.5) == doctest::Approx(0.0));
}

TEST_CASE("convex envelope of min(1-H(p), 1-4p) on [0, 0.3]") {
  PiecewiseLinearCurve mins;
  for (int i = 0; i <= 1000; ++i) {
    const double p = 0.3 * i / 1000.0;
    mins.knots.push_back(p);
    mins.values.push_back(std::min(1.0 - binary_entropy(p), 1.0 - 4.0 * p));
  }
  const PiecewiseLinearCurve env = convex_envelope(mins);

  // pointwise below both inputs across the sampling grid
  for (int i = 0; i <= 1000; ++i) {
    const double p = mins.knots[static_cast<size_t>(i)];
    const double e = env.evaluate(p);
    CHECK(e <= 1.0 - binary_entropy(p) + 1e-12);
    CHECK(e <= 1.0 - 4.0 * p + 1e-12);
  }
  // convex: slopes nondecreasing across knots
  for (size_t i = 2; i < env.knots.size(); ++i) {
    const double s0 = (env.values[i - 1] - env.values[i - 2]) /
                      (env.knots[i - 1] - env.knots[i - 2]);
    const double s1 =
        (env.values[i] - env.values[i - 1]) / (env.knots[i] - env.knots[i - 1]);
    CHECK(s1 >= s0 - 1e-12);
  }
  // agrees with the input at the endpoints
  CHECK(env.evaluate(0.0) == doctest::Approx(1.0));
  CHECK(env.evaluate(0.3) == doctest::Approx(1.0 - 1.2));
}

TEST_CASE("convex envelope rejects degenerate input") {
  PiecewiseLinearCurve one{{0.0}, {1.0}};
  CHECK_THROWS_AS(convex_envelope(one), std::invalid_argument);
  PiecewiseLinearCurve unsorted{{0.0, 0.0}, {1.0, 1.0}};
  CHECK_THROWS_AS(convex_envelope(unsorted), std::invalid_argument);
}
