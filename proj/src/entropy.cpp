#include "qcap/entropy.hpp"

#include <cmath>
#include <numeric>

#include "qcap/eig.hpp"

namespace qcap {

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  x = std::min(1.0, std::max(0.0, x));
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

void validate_density(const DensityMatrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix must be square");
  if (!rho.is_hermitian(1e-10))
    throw std::invalid_argument("density matrix not Hermitian within 1e-10");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-10)
    throw std::invalid_argument("density matrix trace deviates from 1");
  const auto spec = hermitian_eig(rho);
  if (spec.eigenvalues.front() < -kPsdTol)
    throw std::invalid_argument("density matrix has eigenvalue below -1e-10");
}

double entropy_of_eigenvalues(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lam : eigenvalues) {
    if (lam < kEntropyClip) continue;
    s -= lam * std::log2(lam);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix must be square");
  if (!rho.is_hermitian(1e-10))
    throw std::invalid_argument("density matrix not Hermitian within 1e-10");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-10)
    throw std::invalid_argument("density matrix trace deviates from 1");
  const auto spec = hermitian_eig(rho);
  if (spec.eigenvalues.front() < -kPsdTol)
    throw std::invalid_argument("density matrix has eigenvalue below -1e-10");
  return entropy_of_eigenvalues(spec.eigenvalues);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  int total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: nonpositive factor");
    total *= d;
  }
  if (total != rho.rows() || total != rho.cols())
    throw std::invalid_argument("partial_trace: factor dimensions do not match matrix");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: bad subsystem index");
    kept[k] = true;
  }

  int out_dim = 1;
  for (int i = 0; i < n; ++i)
    if (kept[i]) out_dim *= dims[i];

  // Strides for the row-major composite index (factor 0 most significant).
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  std::vector<int> out_stride(n, 0);
  {
    int s = 1;
    for (int i = n - 1; i >= 0; --i) {
      if (kept[i]) {
        out_stride[i] = s;
        s *= dims[i];
      }
    }
  }

  DensityMatrix out(out_dim, out_dim);
  std::vector<int> ridx(n, 0), cidx(n, 0);
  for (int r = 0; r < total; ++r) {
    {
      int rem = r;
      for (int i = 0; i < n; ++i) {
        ridx[i] = rem / stride[i];
        rem %= stride[i];
      }
    }
    for (int c = 0; c < total; ++c) {
      int rem = c;
      bool diag_on_traced = true;
      int ro = 0, co = 0;
      for (int i = 0; i < n; ++i) {
        cidx[i] = rem / stride[i];
        rem %= stride[i];
        if (kept[i]) {
          ro += ridx[i] * out_stride[i];
          co += cidx[i] * out_stride[i];
        } else if (ridx[i] != cidx[i]) {
          diag_on_traced = false;
          break;
        }
      }
      if (diag_on_traced) out(ro, co) += rho(r, c);
    }
  }
  return out;
}

double conditional_entropy(const DensityMatrix& rho, const std::vector<int>& dims,
                           const std::vector<int>& conditioned_on) {
  const DensityMatrix marginal = partial_trace(rho, dims, conditioned_on);
  return von_neumann_entropy(rho) - von_neumann_entropy(marginal);
}

ComplexMatrix purification(const DensityMatrix& rho) {
  const auto spec = hermitian_eig(rho);
  const int d = rho.rows();
  ComplexMatrix psi(d * d, 1);
  for (int k = 0; k < d; ++k) {
    double lam = spec.eigenvalues[k];
    if (lam < 0.0) lam = 0.0;  // clamp PSD roundoff
    const double w = std::sqrt(lam);
    if (w == 0.0) continue;
    for (int i = 0; i < d; ++i) psi(k * d + i, 0) += w * spec.eigenvectors(i, k);
  }
  return psi;
}

}  // namespace qcap
