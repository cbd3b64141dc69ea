#include "qcap/coherent.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qcap/eig.hpp"
#include "qcap/entropy.hpp"

namespace qcap {

DensityMatrix BlochState::to_density() const {
  if (norm() > 1.0 + 1e-12)
    throw std::invalid_argument("BlochState: vector outside the Bloch ball");
  DensityMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + rz);
  rho(1, 1) = 0.5 * (1.0 - rz);
  rho(0, 1) = 0.5 * cplx(rx, -ry);
  rho(1, 0) = 0.5 * cplx(rx, ry);
  return rho;
}

namespace {

double output_entropy(const KrausChannel& ch, const DensityMatrix& phi) {
  const DensityMatrix out = apply(ch, phi);
  auto spec = hermitian_eig(out);
  for (double& lam : spec.eigenvalues)
    if (lam < 0.0 && lam > -kPsdTol) lam = 0.0;
  return entropy_of_eigenvalues(spec.eigenvalues);
}

}  // namespace

CoherentInfoObjective::CoherentInfoObjective(const KrausChannel& ch) : in_dim_(ch.in_dim) {
  terms_.push_back({1.0, ch, complementary(ch)});
}

CoherentInfoObjective::CoherentInfoObjective(const FlaggedChannel& fc)
    : in_dim_(fc.in_dim()) {
  for (const auto& b : fc.branches) {
    if (b.probability == 0.0) continue;
    terms_.push_back({b.probability, b.channel, complementary(b.channel)});
  }
}

double CoherentInfoObjective::operator()(const DensityMatrix& phi) const {
  double value = 0.0;
  for (const auto& t : terms_)
    value += t.weight * (output_entropy(t.forward, phi) - output_entropy(t.complement, phi));
  return value;
}

double coherent_information(const KrausChannel& ch, const DensityMatrix& phi) {
  if (phi.rows() != ch.in_dim)
    throw std::invalid_argument("coherent_information: state dimension mismatch");
  return CoherentInfoObjective(ch)(phi);
}

double flagged_coherent_information(const FlaggedChannel& fc, const DensityMatrix& phi) {
  if (phi.rows() != fc.in_dim())
    throw std::invalid_argument("flagged_coherent_information: state dimension mismatch");
  return CoherentInfoObjective(fc)(phi);
}

namespace {

struct GridPoint {
  double value;
  BlochState state;
};

bool lex_less(const BlochState& a, const BlochState& b) {
  if (a.rx != b.rx) return a.rx < b.rx;
  if (a.ry != b.ry) return a.ry < b.ry;
  return a.rz < b.rz;
}

BlochState clamp_to_ball(BlochState s) {
  const double n = s.norm();
  if (n > 1.0) {
    s.rx /= n;
    s.ry /= n;
    s.rz /= n;
  }
  return s;
}

Q1Result maximize(const CoherentInfoObjective& objective, const Q1Options& options) {
  if (objective.input_dim() != 2)
    throw std::invalid_argument("q1_maximize: qubit input channels only");
  if (options.grid_points < 2)
    throw std::invalid_argument("q1_maximize: grid needs at least 2 points per axis");

  const int g = options.grid_points;
  std::vector<BlochState> lattice;
  lattice.reserve(static_cast<size_t>(g) * g * g);
  for (int ix = 0; ix < g; ++ix)
    for (int iy = 0; iy < g; ++iy)
      for (int iz = 0; iz < g; ++iz) {
        const BlochState s{-1.0 + 2.0 * ix / (g - 1), -1.0 + 2.0 * iy / (g - 1),
                           -1.0 + 2.0 * iz / (g - 1)};
        if (s.norm() <= 1.0 + 1e-12) lattice.push_back(s);
      }

  std::vector<double> values(lattice.size());
  parallel_for(options.policy, static_cast<std::int64_t>(lattice.size()),
               [&](std::int64_t i) {
                 values[static_cast<size_t>(i)] =
                     objective(lattice[static_cast<size_t>(i)].to_density());
               });

  // Serial reduction with a deterministic tie-break.
  size_t best = 0;
  for (size_t i = 1; i < lattice.size(); ++i) {
    if (values[i] > values[best] ||
        (values[i] == values[best] && lex_less(lattice[i], lattice[best])))
      best = i;
  }

  long evaluations = static_cast<long>(lattice.size());
  auto eval = [&](const BlochState& s) {
    ++evaluations;
    return objective(clamp_to_ball(s).to_density());
  };

  // Nelder-Mead refinement from the best lattice point.
  const double h = 1.0 / (g - 1);
  std::array<GridPoint, 4> simplex;
  simplex[0] = {values[best], lattice[best]};
  for (int k = 1; k < 4; ++k) {
    BlochState s = lattice[best];
    (k == 1 ? s.rx : k == 2 ? s.ry : s.rz) += h;
    s = clamp_to_ball(s);
    simplex[static_cast<size_t>(k)] = {eval(s), s};
  }

  bool converged = false;
  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    std::sort(simplex.begin(), simplex.end(), [](const GridPoint& a, const GridPoint& b) {
      if (a.value != b.value) return a.value > b.value;  // descending: best first
      return lex_less(a.state, b.state);
    });
    if (simplex[0].value - simplex[3].value < options.simplex_tol) {
      converged = true;
      break;
    }
    const BlochState& worst = simplex[3].state;
    BlochState centroid{(simplex[0].state.rx + simplex[1].state.rx + simplex[2].state.rx) / 3.0,
                        (simplex[0].state.ry + simplex[1].state.ry + simplex[2].state.ry) / 3.0,
                        (simplex[0].state.rz + simplex[1].state.rz + simplex[2].state.rz) / 3.0};
    auto along = [&](double t) {
      return BlochState{centroid.rx + t * (centroid.rx - worst.rx),
                        centroid.ry + t * (centroid.ry - worst.ry),
                        centroid.rz + t * (centroid.rz - worst.rz)};
    };
    const BlochState reflected = along(1.0);
    const double fr = eval(reflected);
    if (fr > simplex[0].value) {
      const BlochState expanded = along(2.0);
      const double fe = eval(expanded);
      simplex[3] = fe > fr ? GridPoint{fe, clamp_to_ball(expanded)}
                           : GridPoint{fr, clamp_to_ball(reflected)};
      continue;
    }
    if (fr > simplex[2].value) {
      simplex[3] = {fr, clamp_to_ball(reflected)};
      continue;
    }
    const BlochState contracted = along(-0.5);
    const double fc = eval(contracted);
    if (fc > simplex[3].value) {
      simplex[3] = {fc, clamp_to_ball(contracted)};
      continue;
    }
    // Shrink toward the best vertex.
    for (int k = 1; k < 4; ++k) {
      BlochState s{0.5 * (simplex[0].state.rx + simplex[static_cast<size_t>(k)].state.rx),
                   0.5 * (simplex[0].state.ry + simplex[static_cast<size_t>(k)].state.ry),
                   0.5 * (simplex[0].state.rz + simplex[static_cast<size_t>(k)].state.rz)};
      simplex[static_cast<size_t>(k)] = {eval(s), clamp_to_ball(s)};
    }
  }

  std::sort(simplex.begin(), simplex.end(), [](const GridPoint& a, const GridPoint& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a.state, b.state);
  });

  Q1Result result;
  result.value = simplex[0].value;
  result.argmax = simplex[0].state;
  result.evaluations = evaluations;
  result.method = "grid+nelder-mead";
  result.refined_converged = converged;
  return result;
}

}  // namespace

Q1Result q1_maximize(const KrausChannel& ch, const Q1Options& options) {
  return maximize(CoherentInfoObjective(ch), options);
}

Q1Result q1_maximize(const FlaggedChannel& fc, const Q1Options& options) {
  return maximize(CoherentInfoObjective(fc), options);
}

double bb84_alpha_scan(double q, double alpha) {
  if (q < 0.0 || q > 0.5) throw std::domain_error("bb84_alpha_scan: q outside [0,1/2]");
  if (alpha < -1.0 || alpha > 1.0)
    throw std::domain_error("bb84_alpha_scan: alpha outside [-1,1]");
  const double gamma = 4.0 * q * (1.0 - q);
  const double a2 = alpha * alpha;
  const double s_out = std::sqrt(gamma * gamma + a2 * (1.0 - gamma));
  const double s_env = std::sqrt((1.0 - gamma) * (1.0 - gamma) + a2 * gamma);
  return binary_entropy(0.5 * (1.0 - s_out)) - binary_entropy(0.5 * (1.0 - s_env));
}

}  // namespace qcap
