#include "qcap/rng.hpp"

#include <cmath>

namespace qcap {

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.gaussian_complex();
  ComplexMatrix h = g + g.dagger();
  h *= 0.5;
  return h;
}

DensityMatrix random_density(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.gaussian_complex();
  ComplexMatrix rho = g * g.dagger();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  return rho;
}

ComplexMatrix random_isometry(int out_rows, int in_cols, Rng& rng) {
  if (in_cols > out_rows)
    throw std::invalid_argument("random_isometry: more columns than rows");
  ComplexMatrix v(out_rows, in_cols);
  for (int c = 0; c < in_cols; ++c) {
    for (int r = 0; r < out_rows; ++r) v(r, c) = rng.gaussian_complex();
    // Modified Gram-Schmidt against earlier columns, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < c; ++k) {
        cplx overlap = 0.0;
        for (int r = 0; r < out_rows; ++r) overlap += std::conj(v(r, k)) * v(r, c);
        for (int r = 0; r < out_rows; ++r) v(r, c) -= overlap * v(r, k);
      }
    }
    double norm = 0.0;
    for (int r = 0; r < out_rows; ++r) norm += std::norm(v(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < out_rows; ++r) v(r, c) /= norm;
  }
  return v;
}

ComplexMatrix random_unitary(int dim, Rng& rng) { return random_isometry(dim, dim, rng); }

}  // namespace qcap
