#include "qcap/flagged.hpp"

#include <cmath>

#include "qcap/clifford.hpp"

namespace qcap {

FlaggedChannel flagged_extension(std::vector<FlaggedChannel::Branch> branches) {
  if (branches.empty())
    throw std::invalid_argument("flagged_extension: needs at least one branch");
  double sum = 0.0;
  for (const auto& b : branches) {
    if (b.probability < 0.0)
      throw std::invalid_argument("flagged_extension: negative probability");
    if (b.channel.in_dim != branches.front().channel.in_dim ||
        b.channel.out_dim != branches.front().channel.out_dim)
      throw std::invalid_argument("flagged_extension: branch dimensions differ");
    sum += b.probability;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("flagged_extension: probabilities must sum to 1");
  FlaggedChannel fc;
  fc.branches = std::move(branches);
  return fc;
}

KrausChannel reduce_flagged(const FlaggedChannel& fc) {
  std::vector<ComplexMatrix> ops;
  for (const auto& b : fc.branches) {
    if (b.probability == 0.0) continue;
    const double w = std::sqrt(b.probability);
    for (const auto& a : b.channel.kraus) {
      ComplexMatrix op = a;
      op *= w;
      ops.push_back(std::move(op));
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel materialize_flagged(const FlaggedChannel& fc) {
  const int flags = fc.flag_dim();
  const int dout = fc.out_dim();
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < flags; ++i) {
    const auto& b = fc.branches[i];
    const double w = std::sqrt(b.probability);
    for (const auto& a : b.channel.kraus) {
      ComplexMatrix op(dout * flags, fc.in_dim());
      for (int r = 0; r < dout; ++r)
        for (int c = 0; c < fc.in_dim(); ++c) op(r * flags + i, c) = w * a(r, c);
      ops.push_back(std::move(op));
    }
  }
  return KrausChannel(std::move(ops));
}

FlaggedChannel dep_uv_extension(double u, double v) {
  if (!n_uv_degradable(u, v))
    throw std::invalid_argument("dep_uv_extension: (u,v) outside the degradable region");
  const KrausChannel base = n_uv(u, v);
  const auto& group = clifford_group();
  std::vector<FlaggedChannel::Branch> branches;
  branches.reserve(group.size());
  const double p = 1.0 / static_cast<double>(group.size());
  for (const auto& c : group)
    branches.push_back({p, conjugate_channel(base, c, c.dagger())});
  return flagged_extension(std::move(branches));
}

bool bb84_extension_degradable(double q) {
  return q >= 0.0 && 4.0 * q * (1.0 - q) <= 0.5;
}

FlaggedChannel bb84_extension(double q) {
  if (q < 0.0 || q > 0.5) throw std::domain_error("bb84_extension: q outside [0,1/2]");
  const double gamma = 4.0 * q * (1.0 - q);
  const KrausChannel ad = amplitude_damping(gamma);
  const ComplexMatrix& y = pauli(2);
  return flagged_extension({{0.5, ad}, {0.5, conjugate_channel(ad, y, y)}});
}

const ComplexMatrix& bb84_rotation() {
  // exp(-i pi X / 4) = (I - iX)/sqrt(2): maps Y -> Z, Z -> -Y under W . W^dag.
  static const ComplexMatrix w = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {cplx(s, 0), cplx(0, -s), cplx(0, -s), cplx(s, 0)});
  }();
  return w;
}

}  // namespace qcap
