#include "qcap/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcap {

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

}  // namespace

HermitianSpectrum hermitian_eig(const ComplexMatrix& m, double off_tol,
                                int max_sweeps) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eig: matrix not square");
  if (!m.is_hermitian(1e-10))
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian within 1e-10");

  const int n = m.rows();
  ComplexMatrix a = m;
  // Exact symmetrization so roundoff in the input cannot bias the sweep.
  for (int r = 0; r < n; ++r) {
    a(r, r) = cplx(a(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > off_tol) {
    if (sweep++ >= max_sweeps)
      throw NonConvergence("hermitian_eig: Jacobi sweep cap exhausted", off);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        // Unitary plane rotation zeroing a(p,q):
        //   R = [[c, s*phase], [-s*conj(phase), c]] on the (p,q) plane,
        // phase = apq/|apq|, tan(2*theta) = 2r / (a_qq - a_pp).
        const double mu = (a(p, p).real() - a(q, q).real()) / (2.0 * r);
        double t;
        if (mu >= 0.0)
          t = -1.0 / (mu + std::sqrt(mu * mu + 1.0));
        else
          t = 1.0 / (-mu + std::sqrt(mu * mu + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phase = apq / r;
        const cplx sp = s * phase;

        // Columns p,q of A and V: M <- M R.
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - std::conj(sp) * aiq;
          a(i, q) = sp * aip + c * aiq;
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(sp) * viq;
          v(i, q) = sp * vip + c * viq;
        }
        // Rows p,q of A: A <- R^dagger A.
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - sp * aqj;
          a(q, j) = std::conj(sp) * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace qcap
