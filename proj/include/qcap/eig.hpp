#pragma once

#include <vector>

#include "qcap/matrix.hpp"

namespace qcap {

/// Full spectrum of a Hermitian matrix. Eigenvalues ascending, eigenvectors
/// stored as the columns of a unitary matrix, M = V diag(lambda) V^dagger.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization for complex Hermitian matrices.
/// Converges when the off-diagonal Frobenius norm drops below off_tol.
/// Throws std::invalid_argument for non-Hermitian input and NonConvergence
/// (a std::runtime_error carrying the residual) if max_sweeps is exhausted.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m, double off_tol = 1e-12,
                                int max_sweeps = 100);

struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
  double residual;
};

}  // namespace qcap
