#pragma once

#include <optional>

#include "qcap/channel.hpp"

namespace qcap {

struct DegradingResult {
  bool feasible = false;
  double residual = 0.0;  // ||Choi(D o through) - Choi(target)||_F at exit
  int iterations = 0;
  std::optional<KrausChannel> map;
};

/// Feasibility search for a CPTP D with D o through = target, by alternating
/// projections between the affine set {Choi(D): composition + trace
/// preservation} (least squares, pseudoinverse precomputed once) and the PSD
/// cone. Stops at residual < tol or when the residual improves by less than
/// 1e-12 per iteration. An infeasible report is NOT a proof that no such D
/// exists; it only means the search stalled.
DegradingResult find_intertwiner(const KrausChannel& through, const KrausChannel& target,
                                 double tol = 1e-7, int max_iter = 2000);

/// Degrading map D with D o ch = complementary(ch).
DegradingResult find_degrading_map(const KrausChannel& ch, double tol = 1e-7,
                                   int max_iter = 2000);

/// The symmetric two-copy extension built from an isometric extension U of
/// ch: V|phi> = (U|phi>|01> + SWAP_{F1F2} U|phi>|10>)/sqrt(2) with B and E
/// embedded into the leading coordinates of d-dimensional F-spaces,
/// d = max(d_B, d_E). Output factors of V are ordered F1, F2, C1, C2.
struct NoCloningExtension {
  IsometricExtension isometry;       // V itself
  KrausChannel extension;            // T = Tr_{F2 C2} V . V^dag, on F1 (x) C1
  KrausChannel mirror;               // Tr_{F1 C1} V . V^dag, on F2 (x) C2
  int pad_dim = 0;                   // d
};

NoCloningExtension no_cloning_extension(const KrausChannel& ch);

/// ch with its output embedded into the first rows of a dim-dimensional
/// space; used as the degrading-reduction target for no-cloning extensions.
KrausChannel pad_output(const KrausChannel& ch, int dim);

}  // namespace qcap
