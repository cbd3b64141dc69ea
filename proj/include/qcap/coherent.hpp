#pragma once

#include <string>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/flagged.hpp"
#include "qcap/parallel.hpp"

namespace qcap {

/// Qubit state by its Bloch vector, rho = (I + r . sigma)/2.
struct BlochState {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  double norm() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }
  DensityMatrix to_density() const;
};

/// I^c(ch, phi) = S(ch(phi)) - S(complementary(ch)(phi)), in bits.
double coherent_information(const KrausChannel& ch, const DensityMatrix& phi);

/// Blockwise evaluation for flagged channels: the flag entropies of output
/// and environment cancel, leaving sum_i p_i (S(N_i phi) - S(N_i^c phi)).
double flagged_coherent_information(const FlaggedChannel& fc, const DensityMatrix& phi);

/// Coherent information objective with branch complements precomputed once.
class CoherentInfoObjective {
public:
  explicit CoherentInfoObjective(const KrausChannel& ch);
  explicit CoherentInfoObjective(const FlaggedChannel& fc);

  double operator()(const DensityMatrix& phi) const;
  int input_dim() const { return in_dim_; }

private:
  struct Term {
    double weight;
    KrausChannel forward;
    KrausChannel complement;
  };
  std::vector<Term> terms_;
  int in_dim_ = 0;
};

struct Q1Options {
  int grid_points = 21;       // lattice points per Bloch axis
  double simplex_tol = 1e-9;  // Nelder-Mead value-spread stop
  int max_iter = 500;         // refinement iteration cap
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct Q1Result {
  double value = 0.0;
  BlochState argmax;
  long evaluations = 0;
  std::string method;
  bool refined_converged = true;
};

/// max_phi I^c over the Bloch ball: lattice scan (ties broken toward the
/// lexicographically smaller Bloch vector) followed by Nelder-Mead
/// refinement. Qubit inputs only.
Q1Result q1_maximize(const KrausChannel& ch, const Q1Options& options = {});
Q1Result q1_maximize(const FlaggedChannel& fc, const Q1Options& options = {});

/// Closed-form coherent information of the BB84 extension at the input
/// I/2 + alpha Y/2; even in alpha and maximal at alpha = 0.
double bb84_alpha_scan(double q, double alpha);

}  // namespace qcap
