#pragma once

#include <string>
#include <vector>

#include "qcap/matrix.hpp"

namespace qcap {

/// CPTP map as a finite Kraus list; every operator is out_dim x in_dim.
struct KrausChannel {
  std::vector<ComplexMatrix> kraus;
  int in_dim = 0;
  int out_dim = 0;

  KrausChannel() = default;
  explicit KrausChannel(std::vector<ComplexMatrix> ops);
};

struct CptpReport {
  bool ok = false;
  double deviation = 0.0;  // Frobenius norm of sum A^dag A - I
};

/// Checks sum_k A_k^dag A_k = I within tol; never throws.
CptpReport validate_cptp(const KrausChannel& ch, double tol = 1e-10);

/// sum_k A_k rho A_k^dag. Throws on dimension mismatch.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Isometry V: in -> out (x) env with Tr_env V rho V^dag = ch(rho).
/// Composite row index is b * env_dim + e.
struct IsometricExtension {
  ComplexMatrix v;
  int in_dim = 0;
  int out_dim = 0;
  int env_dim = 0;

  /// V rho V^dag on out (x) env.
  DensityMatrix apply_joint(const DensityMatrix& rho) const;
};

/// Canonical Stinespring dilation V = sum_k A_k (x) |k>_env; env_dim = #Kraus.
IsometricExtension isometric_extension(const KrausChannel& ch);

/// The map to the environment, rho -> Tr_out V rho V^dag, in Kraus form.
KrausChannel complementary(const KrausChannel& ch);

/// Normalized Choi state J = (I (x) ch)(|Omega><Omega|), |Omega> the
/// normalized maximally entangled state; trace 1, Tr_out J = I/in_dim.
/// Composite index is i_in * out_dim + j_out.
struct ChoiMatrix {
  ComplexMatrix matrix;
  int in_dim = 0;
  int out_dim = 0;
};

ChoiMatrix choi(const KrausChannel& ch);

/// Frobenius norm of the normalized-Choi difference; the canonical
/// channel-equality metric (threshold 1e-9 unless stated otherwise).
double choi_distance(const KrausChannel& a, const KrausChannel& b);

/// Kraus list recovered from a PSD Choi state; eigenvalues below clip are
/// dropped, so this doubles as Kraus-rank compression.
KrausChannel kraus_from_choi(const ChoiMatrix& j, double clip = 1e-12);
KrausChannel compress(const KrausChannel& ch, double clip = 1e-12);

/// second after first: rho -> second(first(rho)).
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

/// rho -> w_out * ch(w_in rho w_in^dag) * w_out^dag.
KrausChannel conjugate_channel(const KrausChannel& ch, const ComplexMatrix& w_in,
                               const ComplexMatrix& w_out);

// --- the channel zoo ---

/// Pauli matrices; index 0..3 = I, X, Y, Z.
const ComplexMatrix& pauli(int i);

KrausChannel identity_channel(int dim);
KrausChannel depolarizing(double p);
KrausChannel pauli_channel(double pi, double px, double py, double pz);
KrausChannel amplitude_damping(double gamma);

/// The general degradable qubit family with Kraus
///   A+ = diag(cos((v-u)/2), cos((v+u)/2)),
///   A- = offdiag(sin((v+u)/2); sin((v-u)/2)).
KrausChannel n_uv(double u, double v);
/// Degradable iff |sin v| <= |cos u|.
bool n_uv_degradable(double u, double v);

/// Pauli channel with weights {(1-q)^2, q(1-q), q^2, q(1-q)} on {I,X,Y,Z}.
KrausChannel bb84_channel(double q);

}  // namespace qcap
