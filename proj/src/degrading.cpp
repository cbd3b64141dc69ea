#include "qcap/degrading.hpp"

#include <cmath>
#include <limits>

#include "qcap/eig.hpp"

namespace qcap {

namespace {

// Dense complex linear system A vec(J) = b encoding, for an unknown channel
// D: X -> Y in normalized-Choi form,
//   D(T(|a><a'|)) = G(|a><a'|)  for every input basis pair, plus
//   Tr_Y Choi(D) = I_X / d_X    (trace preservation).
struct ConstraintSystem {
  ComplexMatrix a;          // m x n^2
  std::vector<cplx> b;      // m
  int n = 0;                // d_X * d_Y

  std::vector<cplx> apply(const ComplexMatrix& j) const {
    std::vector<cplx> out(b.size());
    for (int r = 0; r < a.rows(); ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < a.cols(); ++c) {
        const cplx coeff = a(r, c);
        if (coeff != 0.0) acc += coeff * j(c / n, c % n);
      }
      out[static_cast<size_t>(r)] = acc;
    }
    return out;
  }
};

ConstraintSystem build_system(const KrausChannel& through, const KrausChannel& target) {
  const int da = through.in_dim;
  const int dx = through.out_dim;
  const int dy = target.out_dim;
  const int n = dx * dy;

  ConstraintSystem sys;
  sys.n = n;
  const int m = da * da * dy * dy + dx * dx;
  sys.a = ComplexMatrix(m, n * n);
  sys.b.assign(static_cast<size_t>(m), 0.0);

  int row = 0;
  ComplexMatrix sigma(dx, dx);
  for (int ain = 0; ain < da; ++ain) {
    for (int aout = 0; aout < da; ++aout) {
      // sigma = through(|ain><aout|); rhs block = target(|ain><aout|).
      for (int x = 0; x < dx; ++x)
        for (int xp = 0; xp < dx; ++xp) {
          cplx s = 0.0;
          for (const auto& t : through.kraus) s += t(x, ain) * std::conj(t(xp, aout));
          sigma(x, xp) = s;
        }
      for (int y = 0; y < dy; ++y) {
        for (int yp = 0; yp < dy; ++yp) {
          for (int x = 0; x < dx; ++x)
            for (int xp = 0; xp < dx; ++xp) {
              const cplx coeff = static_cast<double>(dx) * sigma(x, xp);
              if (coeff != 0.0)
                sys.a(row, (x * dy + y) * n + (xp * dy + yp)) = coeff;
            }
          cplx rhs = 0.0;
          for (const auto& g : target.kraus) rhs += g(y, ain) * std::conj(g(yp, aout));
          sys.b[static_cast<size_t>(row)] = rhs;
          ++row;
        }
      }
    }
  }
  for (int x = 0; x < dx; ++x)
    for (int xp = 0; xp < dx; ++xp) {
      for (int y = 0; y < dy; ++y) sys.a(row, (x * dy + y) * n + (xp * dy + y)) = 1.0;
      sys.b[static_cast<size_t>(row)] = (x == xp) ? 1.0 / dx : 0.0;
      ++row;
    }
  return sys;
}

// Pseudoinverse applicator for M = A A^dag, via one eigendecomposition.
struct GramPseudoInverse {
  HermitianSpectrum spec;
  double cut = 0.0;

  explicit GramPseudoInverse(const ComplexMatrix& gram) {
    spec = hermitian_eig(gram, 1e-12 * std::max(1.0, gram.frobenius_norm()));
    cut = 1e-12 * std::max(1e-300, spec.eigenvalues.back());
  }

  std::vector<cplx> solve(const std::vector<cplx>& r) const {
    const int m = spec.eigenvectors.rows();
    std::vector<cplx> out(static_cast<size_t>(m), 0.0);
    for (int k = 0; k < m; ++k) {
      const double lam = spec.eigenvalues[k];
      if (lam <= cut) continue;
      cplx proj = 0.0;
      for (int i = 0; i < m; ++i)
        proj += std::conj(spec.eigenvectors(i, k)) * r[static_cast<size_t>(i)];
      proj /= lam;
      for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] += spec.eigenvectors(i, k) * proj;
    }
    return out;
  }
};

void project_psd(ComplexMatrix& j) {
  const int n = j.rows();
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const cplx avg = 0.5 * (j(r, c) + std::conj(j(c, r)));
      j(r, c) = avg;
      j(c, r) = std::conj(avg);
    }
  const auto spec = hermitian_eig(j, 1e-12 * std::max(1.0, j.frobenius_norm()));
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double lam = spec.eigenvalues[k];
    if (lam <= 0.0) continue;
    for (int r = 0; r < n; ++r) {
      const cplx vr = lam * spec.eigenvectors(r, k);
      for (int c = 0; c < n; ++c) out(r, c) += vr * std::conj(spec.eigenvectors(c, k));
    }
  }
  j = out;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Right-multiply the Kraus list by (sum K^dag K)^{-1/2} so trace preservation
// holds exactly; near a feasible point this is an O(residual) perturbation.
void polish_trace_preserving(KrausChannel& ch) {
  ComplexMatrix gram(ch.in_dim, ch.in_dim);
  for (const auto& k : ch.kraus) gram += k.dagger() * k;
  const auto spec = hermitian_eig(gram, 1e-13 * std::max(1.0, gram.frobenius_norm()));
  if (spec.eigenvalues.front() < 1e-12) return;  // too degenerate to polish
  ComplexMatrix inv_sqrt(ch.in_dim, ch.in_dim);
  for (int k = 0; k < ch.in_dim; ++k) {
    const double w = 1.0 / std::sqrt(spec.eigenvalues[k]);
    for (int r = 0; r < ch.in_dim; ++r) {
      const cplx vr = w * spec.eigenvectors(r, k);
      for (int c = 0; c < ch.in_dim; ++c)
        inv_sqrt(r, c) += vr * std::conj(spec.eigenvectors(c, k));
    }
  }
  for (auto& k : ch.kraus) k = k * inv_sqrt;
}

}  // namespace

DegradingResult find_intertwiner(const KrausChannel& through, const KrausChannel& target,
                                 double tol, int max_iter) {
  if (through.in_dim != target.in_dim)
    throw std::invalid_argument("find_intertwiner: input dimensions differ");

  const int dx = through.out_dim;
  const int dy = target.out_dim;
  const int n = dx * dy;

  const ConstraintSystem sys = build_system(through, target);

  // Gram matrix of the constraint rows, factorized once.
  const int m = sys.a.rows();
  ComplexMatrix gram(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = r; c < m; ++c) {
      cplx acc = 0.0;
      for (int k = 0; k < sys.a.cols(); ++k) acc += sys.a(r, k) * std::conj(sys.a(c, k));
      gram(r, c) = acc;
      gram(c, r) = std::conj(acc);
    }
  const GramPseudoInverse pinv(gram);

  ComplexMatrix j = ComplexMatrix::identity(n);
  j *= 1.0 / n;
  ComplexMatrix j_affine = j;

  double prev_residual = std::numeric_limits<double>::infinity();
  double residual = prev_residual;
  int iter = 0;
  while (iter < max_iter) {
    ++iter;
    // Affine projection: vec(J) -= A^dag pinv(A A^dag) (A vec(J) - b).
    std::vector<cplx> r = sys.apply(j);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= sys.b[i];
    const std::vector<cplx> y = pinv.solve(r);
    for (int row = 0; row < m; ++row) {
      const cplx yr = y[static_cast<size_t>(row)];
      if (yr == 0.0) continue;
      for (int col = 0; col < sys.a.cols(); ++col) {
        const cplx coeff = sys.a(row, col);
        if (coeff != 0.0) j(col / n, col % n) -= std::conj(coeff) * yr;
      }
    }
    j_affine = j;
    project_psd(j);

    std::vector<cplx> r2 = sys.apply(j);
    for (size_t i = 0; i < r2.size(); ++i) r2[i] -= sys.b[i];
    residual = norm2(r2);
    if (residual < tol) break;
    if (prev_residual - residual < 1e-12) break;  // stalled
    prev_residual = residual;
  }

  DegradingResult result;
  result.iterations = iter;
  // Extract from the affine iterate (trace preservation exact there), drop
  // the residual negative directions, then polish TP back to machine zero.
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const cplx avg = 0.5 * (j_affine(r, c) + std::conj(j_affine(c, r)));
      j_affine(r, c) = avg;
      j_affine(c, r) = std::conj(avg);
    }
  KrausChannel candidate = kraus_from_choi(ChoiMatrix{j_affine, dx, dy}, 1e-13);
  polish_trace_preserving(candidate);
  const double act_residual = choi_distance(compose(candidate, through), target);
  const double cptp_dev = validate_cptp(candidate, tol).deviation;
  result.residual = act_residual;
  result.feasible = act_residual <= tol && cptp_dev <= tol;
  if (result.feasible) result.map = std::move(candidate);
  return result;
}

DegradingResult find_degrading_map(const KrausChannel& ch, double tol, int max_iter) {
  return find_intertwiner(ch, complementary(ch), tol, max_iter);
}

KrausChannel pad_output(const KrausChannel& ch, int dim) {
  if (dim < ch.out_dim) throw std::invalid_argument("pad_output: dim too small");
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.kraus.size());
  for (const auto& a : ch.kraus) {
    ComplexMatrix op(dim, ch.in_dim);
    for (int r = 0; r < ch.out_dim; ++r)
      for (int c = 0; c < ch.in_dim; ++c) op(r, c) = a(r, c);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

NoCloningExtension no_cloning_extension(const KrausChannel& ch) {
  const IsometricExtension u = isometric_extension(ch);
  const int d = std::max(u.out_dim, u.env_dim);
  const int in = ch.in_dim;

  // Row index of V is ((f1*d + f2)*2 + c1)*2 + c2; B sits in the first
  // out_dim coordinates of F1, E in the first env_dim coordinates of F2.
  NoCloningExtension ext;
  ext.pad_dim = d;
  ComplexMatrix v(d * d * 4, in);
  const double w = 1.0 / std::sqrt(2.0);
  for (int b = 0; b < u.out_dim; ++b)
    for (int e = 0; e < u.env_dim; ++e)
      for (int a = 0; a < in; ++a) {
        const cplx amp = w * u.v(b * u.env_dim + e, a);
        if (amp == 0.0) continue;
        v((b * d + e) * 4 + 1, a) += amp;  // |01> branch: (f1,f2)=(b,e)
        v((e * d + b) * 4 + 2, a) += amp;  // |10> branch: swapped, c1c2=10
      }
  ext.isometry = IsometricExtension{v, in, d * d, 4};

  // T = Tr_{F2 C2}: keep (f1, c1). Regroup the composite row index as
  // (f1*2 + c1) x (f2*2 + c2) and slice.
  auto regroup = [&](bool keep_first_pair) {
    std::vector<ComplexMatrix> ops;
    for (int f2 = 0; f2 < d; ++f2)
      for (int c2 = 0; c2 < 2; ++c2) {
        ComplexMatrix op(d * 2, in);
        double weight = 0.0;
        for (int f1 = 0; f1 < d; ++f1)
          for (int c1 = 0; c1 < 2; ++c1)
            for (int a = 0; a < in; ++a) {
              const int row = keep_first_pair ? ((f1 * d + f2) * 2 + c1) * 2 + c2
                                              : ((f2 * d + f1) * 2 + c2) * 2 + c1;
              op(f1 * 2 + c1, a) = v(row, a);
              weight += std::norm(op(f1 * 2 + c1, a));
            }
        if (weight > 1e-30) ops.push_back(std::move(op));
      }
    return KrausChannel(std::move(ops));
  };
  ext.extension = regroup(true);
  ext.mirror = regroup(false);
  return ext;
}

}  // namespace qcap
