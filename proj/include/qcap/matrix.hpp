#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qcap {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  ComplexMatrix(int rows, int cols, std::initializer_list<cplx> entries)
      : ComplexMatrix(rows, cols) {
    if (entries.size() != data_.size())
      throw std::invalid_argument("ComplexMatrix: entry count mismatch");
    std::copy(entries.begin(), entries.end(), data_.begin());
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  ComplexMatrix dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  cplx trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  /// Max entrywise |M - M^dagger|; 0 for exactly Hermitian matrices.
  double hermiticity_deviation() const {
    if (rows_ != cols_) return 1.0;
    double dev = 0.0;
    for (int r = 0; r < rows_; ++r)
      for (int c = r; c < cols_; ++c)
        dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return dev;
  }

  bool is_hermitian(double tol = 1e-12) const {
    return rows_ == cols_ && hermiticity_deviation() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int k = 0; k < a.cols_; ++k) {
        const cplx ark = a(r, k);
        if (ark == 0.0) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
      }
    }
    return out;
  }

private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra)
    for (int ca = 0; ca < a.cols(); ++ca) {
      const cplx f = a(ra, ca);
      if (f == 0.0) continue;
      for (int rb = 0; rb < b.rows(); ++rb)
        for (int cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
    }
  return out;
}

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

/// States are plain Hermitian PSD unit-trace matrices.
using DensityMatrix = ComplexMatrix;

}  // namespace qcap
