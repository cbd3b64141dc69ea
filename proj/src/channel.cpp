#include "qcap/channel.hpp"

#include <cmath>

#include "qcap/eig.hpp"
#include "qcap/entropy.hpp"

namespace qcap {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : kraus(std::move(ops)) {
  if (kraus.empty()) throw std::invalid_argument("KrausChannel: needs at least one operator");
  out_dim = kraus.front().rows();
  in_dim = kraus.front().cols();
  for (const auto& a : kraus)
    if (a.rows() != out_dim || a.cols() != in_dim)
      throw std::invalid_argument("KrausChannel: inconsistent operator shapes");
}

CptpReport validate_cptp(const KrausChannel& ch, double tol) {
  ComplexMatrix sum(ch.in_dim, ch.in_dim);
  for (const auto& a : ch.kraus) sum += a.dagger() * a;
  sum -= ComplexMatrix::identity(ch.in_dim);
  const double dev = sum.frobenius_norm();
  return {dev <= tol, dev};
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.rows() != ch.in_dim || rho.cols() != ch.in_dim)
    throw std::invalid_argument("apply: state dimension mismatch");
  DensityMatrix out(ch.out_dim, ch.out_dim);
  for (const auto& a : ch.kraus) out += a * rho * a.dagger();
  return out;
}

DensityMatrix IsometricExtension::apply_joint(const DensityMatrix& rho) const {
  if (rho.rows() != in_dim)
    throw std::invalid_argument("apply_joint: state dimension mismatch");
  return v * rho * v.dagger();
}

IsometricExtension isometric_extension(const KrausChannel& ch) {
  const auto report = validate_cptp(ch);
  if (!report.ok)
    throw std::invalid_argument("isometric_extension: channel not CPTP, deviation " +
                                std::to_string(report.deviation));
  const int env = static_cast<int>(ch.kraus.size());
  IsometricExtension ext;
  ext.in_dim = ch.in_dim;
  ext.out_dim = ch.out_dim;
  ext.env_dim = env;
  ext.v = ComplexMatrix(ch.out_dim * env, ch.in_dim);
  for (int k = 0; k < env; ++k)
    for (int b = 0; b < ch.out_dim; ++b)
      for (int a = 0; a < ch.in_dim; ++a) ext.v(b * env + k, a) = ch.kraus[k](b, a);
  return ext;
}

KrausChannel complementary(const KrausChannel& ch) {
  const auto report = validate_cptp(ch);
  if (!report.ok)
    throw std::invalid_argument("complementary: channel not CPTP, deviation " +
                                std::to_string(report.deviation));
  // Env-side Kraus: B_b[e,a] = A_e[b,a], one operator per output basis index.
  const int env = static_cast<int>(ch.kraus.size());
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.out_dim);
  for (int b = 0; b < ch.out_dim; ++b) {
    ComplexMatrix op(env, ch.in_dim);
    for (int e = 0; e < env; ++e)
      for (int a = 0; a < ch.in_dim; ++a) op(e, a) = ch.kraus[e](b, a);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

ChoiMatrix choi(const KrausChannel& ch) {
  const int din = ch.in_dim, dout = ch.out_dim;
  ChoiMatrix j;
  j.in_dim = din;
  j.out_dim = dout;
  j.matrix = ComplexMatrix(din * dout, din * dout);
  for (const auto& a : ch.kraus)
    for (int i = 0; i < din; ++i)
      for (int b = 0; b < dout; ++b) {
        const cplx left = a(b, i);
        if (left == 0.0) continue;
        for (int k = 0; k < din; ++k)
          for (int c = 0; c < dout; ++c)
            j.matrix(i * dout + b, k * dout + c) += left * std::conj(a(c, k));
      }
  j.matrix *= 1.0 / din;
  return j;
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.in_dim != b.in_dim || a.out_dim != b.out_dim)
    throw std::invalid_argument("choi_distance: channel shapes differ");
  return distance(choi(a).matrix, choi(b).matrix);
}

KrausChannel kraus_from_choi(const ChoiMatrix& j, double clip) {
  const int din = j.in_dim, dout = j.out_dim;
  if (j.matrix.rows() != din * dout)
    throw std::invalid_argument("kraus_from_choi: dimension mismatch");
  const auto spec = hermitian_eig(j.matrix);
  std::vector<ComplexMatrix> ops;
  for (int k = 0; k < j.matrix.rows(); ++k) {
    const double lam = spec.eigenvalues[k];
    if (lam <= clip) continue;
    const double w = std::sqrt(lam * din);
    ComplexMatrix op(dout, din);
    for (int i = 0; i < din; ++i)
      for (int b = 0; b < dout; ++b) op(b, i) = w * spec.eigenvectors(i * dout + b, k);
    ops.push_back(std::move(op));
  }
  if (ops.empty()) throw std::invalid_argument("kraus_from_choi: Choi matrix is zero");
  return KrausChannel(std::move(ops));
}

KrausChannel compress(const KrausChannel& ch, double clip) {
  return kraus_from_choi(choi(ch), clip);
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.in_dim != first.out_dim)
    throw std::invalid_argument("compose: inner dimensions differ");
  std::vector<ComplexMatrix> ops;
  ops.reserve(second.kraus.size() * first.kraus.size());
  for (const auto& d : second.kraus)
    for (const auto& a : first.kraus) ops.push_back(d * a);
  return KrausChannel(std::move(ops));
}

KrausChannel conjugate_channel(const KrausChannel& ch, const ComplexMatrix& w_in,
                               const ComplexMatrix& w_out) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.kraus.size());
  for (const auto& a : ch.kraus) ops.push_back(w_out * a * w_in);
  return KrausChannel(std::move(ops));
}

const ComplexMatrix& pauli(int i) {
  static const ComplexMatrix mats[4] = {
      ComplexMatrix(2, 2, {1, 0, 0, 1}),
      ComplexMatrix(2, 2, {0, 1, 1, 0}),
      ComplexMatrix(2, 2, {0, cplx(0, -1), cplx(0, 1), 0}),
      ComplexMatrix(2, 2, {1, 0, 0, -1}),
  };
  if (i < 0 || i > 3) throw std::invalid_argument("pauli: index out of range");
  return mats[i];
}

KrausChannel identity_channel(int dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

KrausChannel pauli_channel(double pi, double px, double py, double pz) {
  const double w[4] = {pi, px, py, pz};
  double sum = 0.0;
  for (double p : w) {
    if (p < -1e-12) throw std::invalid_argument("pauli_channel: negative weight");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("pauli_channel: weights must sum to 1");
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < 4; ++i) {
    if (w[i] <= 0.0) continue;
    ComplexMatrix op = pauli(i);
    op *= std::sqrt(w[i]);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel depolarizing(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("depolarizing: p outside [0,1]");
  return pauli_channel(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

KrausChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::domain_error("amplitude_damping: gamma outside [0,1]");
  ComplexMatrix a0(2, 2, {1, 0, 0, std::sqrt(1.0 - gamma)});
  ComplexMatrix a1(2, 2, {0, std::sqrt(gamma), 0, 0});
  return KrausChannel({std::move(a0), std::move(a1)});
}

KrausChannel n_uv(double u, double v) {
  const double cm = std::cos(0.5 * (v - u));
  const double cp = std::cos(0.5 * (v + u));
  const double sp = std::sin(0.5 * (v + u));
  const double sm = std::sin(0.5 * (v - u));
  ComplexMatrix aplus(2, 2, {cm, 0, 0, cp});
  ComplexMatrix aminus(2, 2, {0, sp, sm, 0});
  return KrausChannel({std::move(aplus), std::move(aminus)});
}

bool n_uv_degradable(double u, double v) {
  return std::abs(std::sin(v)) <= std::abs(std::cos(u));
}

KrausChannel bb84_channel(double q) {
  if (q < 0.0 || q > 0.5) throw std::domain_error("bb84_channel: q outside [0,1/2]");
  return pauli_channel((1.0 - q) * (1.0 - q), q * (1.0 - q), q * q, q * (1.0 - q));
}

}  // namespace qcap
