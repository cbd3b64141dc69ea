#pragma once

#include <vector>

#include "qcap/channel.hpp"

namespace qcap {

/// Probability-weighted branch list representing
///   T(rho) = sum_i p_i N_i(rho) (x) |i><i|   (flag is the second factor).
struct FlaggedChannel {
  struct Branch {
    double probability;
    KrausChannel channel;
  };
  std::vector<Branch> branches;

  int in_dim() const { return branches.front().channel.in_dim; }
  int out_dim() const { return branches.front().channel.out_dim; }
  int flag_dim() const { return static_cast<int>(branches.size()); }
};

/// Validates probabilities (sum 1 within 1e-12, nonnegative) and shared dims.
FlaggedChannel flagged_extension(std::vector<FlaggedChannel::Branch> branches);

/// Partial trace on the flag: Kraus union { sqrt(p_i) A_k^(i) }.
KrausChannel reduce_flagged(const FlaggedChannel& fc);

/// Full (out*flag)-dimensional Kraus form; the cross-check path for the
/// blockwise entropy shortcuts.
KrausChannel materialize_flagged(const FlaggedChannel& fc);

/// 24 equiprobable branches c^dag N_(u,v) c over the Clifford group.
/// Requires the degradable region |sin v| <= |cos u|.
FlaggedChannel dep_uv_extension(double u, double v);

/// Two equiprobable branches: amplitude damping gamma(q) = 4q(1-q) and its
/// Y-conjugate. Defined for q in [0, 1/2]; the branches are degradable
/// (gamma <= 1/2) only for q <= (2 - sqrt 2)/4.
FlaggedChannel bb84_extension(double q);
bool bb84_extension_degradable(double q);

/// Unitary W mapping Y <-> Z under conjugation (fixing X); conjugating the
/// reduced bb84_extension by W on input and output yields bb84_channel(q).
const ComplexMatrix& bb84_rotation();

}  // namespace qcap
