#pragma once

#include <vector>

#include "qcap/matrix.hpp"

namespace qcap {

// Eigenvalues below this contribute exactly 0 to entropy sums; rank-deficient
// outputs are exact in the constructions used here.
inline constexpr double kEntropyClip = 1e-12;
// Eigenvalues in [-kPsdTol, 0) are clamped to 0; anything lower rejects the state.
inline constexpr double kPsdTol = 1e-10;

/// H(x) = -x log2 x - (1-x) log2(1-x), in bits. Throws std::domain_error
/// outside [0,1] (up to 1e-12 roundoff slack, which is clamped).
double binary_entropy(double x);

/// Throws std::invalid_argument when rho is not Hermitian, not PSD within
/// -1e-10, or trace deviates from 1 by more than 1e-10.
void validate_density(const DensityMatrix& rho);

/// S(rho) = -sum lambda_i log2 lambda_i, in bits. Validates the state.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of a spectrum that is already known (skips validation).
double entropy_of_eigenvalues(const std::vector<double>& eigenvalues);

/// Trace out every tensor factor not listed in `keep`. `dims` are the factor
/// dimensions, most significant first; their product must match rho.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// H(rest | conditioned_on) = S(rho) - S(marginal on conditioned_on).
double conditional_entropy(const DensityMatrix& rho, const std::vector<int>& dims,
                           const std::vector<int>& conditioned_on);

/// Column vector |Phi> on ref (x) sys with Tr_ref |Phi><Phi| = rho.
ComplexMatrix purification(const DensityMatrix& rho);

}  // namespace qcap
