#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcap/parallel.hpp"

namespace qcap {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240809;
  double tolerance_override = 0.0;  // > 0 replaces every per-check threshold
  ExecPolicy policy = ExecPolicy::Parallel;
};

// Closed-form Q1 of the Clifford-flagged extension vs the optimizer, 5x5
// in-region (u,v) grid.
std::vector<CheckResult> check_lemma5(const VerifyOptions& options);
// Twirled n_uv: entanglement fidelity cos^2(u/2)cos^2(v/2) and Choi equality
// with the matching depolarizing channel, 50 random (u,v).
std::vector<CheckResult> check_lemma6(const VerifyOptions& options);
// BB84: alpha-scan closed form, optimizer match, and the zero crossing at
// (2 - sqrt 2)/4.
std::vector<CheckResult> check_lemma9(const VerifyOptions& options);
// Bound-curve properties of the 601-point depolarizing table on [0, 0.3].
std::vector<CheckResult> check_figure1(const VerifyOptions& options);
// Coherent-information concavity and H(V|B) <= H(V|E) on random degradable
// instances.
std::vector<CheckResult> check_concavity(const VerifyOptions& options);
// Swap symmetry and vanishing Q1 of the no-cloning extension at p = 1/4.
std::vector<CheckResult> check_no_cloning(const VerifyOptions& options);
// Degrading-map search: feasible for amplitude damping gamma <= 1/2,
// stalled above.
std::vector<CheckResult> check_degrading(const VerifyOptions& options);
// Eigensolver reconstruction and entropy unitary invariance floors.
std::vector<CheckResult> check_numerics_floor(const VerifyOptions& options);
// hashing <= thm6 <= cor7 <= min(1-H, 1-4p) on a 500-point grid.
std::vector<CheckResult> check_ordering(const VerifyOptions& options);

/// The `verify` subcommand set: lemma 5, 6, 9, concavity, ordering.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qcap
