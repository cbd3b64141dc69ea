#pragma once

#include <cstdint>
#include <random>

#include "qcap/matrix.hpp"

namespace qcap {

/// Deterministic RNG. Distributions are hand-rolled on top of mt19937_64 so
/// the same seed reproduces the same stream on every toolchain.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return (engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {  // Box-Muller
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586476925287 * u2);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925287 * u2);
  }

  cplx gaussian_complex() { return {gaussian(), gaussian()}; }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_hermitian(int dim, Rng& rng);
DensityMatrix random_density(int dim, Rng& rng);
ComplexMatrix random_unitary(int dim, Rng& rng);
/// Random isometry dim*env_dim x dim (Gram-Schmidt of Gaussian columns).
ComplexMatrix random_isometry(int out_rows, int in_cols, Rng& rng);

}  // namespace qcap
