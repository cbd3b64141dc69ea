#pragma once

#include <vector>

#include "qcap/channel.hpp"
#include "qcap/matrix.hpp"
#include "qcap/rng.hpp"

namespace qcap::test {

inline DensityMatrix maximally_mixed(int dim) {
  DensityMatrix rho = ComplexMatrix::identity(dim);
  rho *= 1.0 / dim;
  return rho;
}

inline DensityMatrix basis_projector(int dim, int index) {
  DensityMatrix rho(dim, dim);
  rho(index, index) = 1.0;
  return rho;
}

inline DensityMatrix bell_state() {
  // |phi+><phi+| on two qubits.
  DensityMatrix rho(4, 4);
  for (int i : {0, 3})
    for (int j : {0, 3}) rho(i, j) = 0.5;
  return rho;
}

/// Random qubit channel with the given Kraus rank (Stinespring slices of a
/// random isometry).
inline KrausChannel random_qubit_channel(int kraus_rank, Rng& rng) {
  const ComplexMatrix v = random_isometry(2 * kraus_rank, 2, rng);
  std::vector<ComplexMatrix> ops;
  for (int k = 0; k < kraus_rank; ++k) {
    ComplexMatrix a(2, 2);
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) a(b, c) = v(b * kraus_rank + k, c);
    ops.push_back(std::move(a));
  }
  return KrausChannel(std::move(ops));
}

}  // namespace qcap::test
