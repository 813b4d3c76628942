#include "holonomy/qmatrix.hpp"

#include <stdexcept>

#include "holonomy/errors.hpp"

namespace holonomy {

QVector QVector::basis(std::size_t dim, std::size_t t, const Quat& x) {
  if (t >= dim) throw DimensionMismatch("basis index out of range");
  QVector v(dim);
  v[t] = x;
  return v;
}

QVector QVector::from_real(const RealVector& v) {
  if (v.size() % 4 != 0) throw DimensionMismatch("real vector length not divisible by 4");
  QVector out(v.size() / 4);
  for (std::size_t t = 0; t < out.dim(); ++t)
    for (int a = 0; a < 4; ++a) out[t][a] = v[4 * t + a];
  return out;
}

bool QVector::is_zero() const {
  for (const auto& q : coords_)
    if (!q.is_zero()) return false;
  return true;
}

RealVector QVector::realify() const {
  RealVector v(4 * dim());
  for (std::size_t t = 0; t < dim(); ++t)
    for (int a = 0; a < 4; ++a) v[4 * t + a] = coords_[t][a];
  return v;
}

QVector& QVector::operator+=(const QVector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("QVector sum");
  for (std::size_t t = 0; t < dim(); ++t) coords_[t] += o.coords_[t];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("QVector difference");
  for (std::size_t t = 0; t < dim(); ++t) coords_[t] -= o.coords_[t];
  return *this;
}

QVector operator-(const QVector& a) {
  QVector out(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) out[t] = -a[t];
  return out;
}

QVector operator*(const Quat& a, const QVector& x) {
  QVector out(x.dim());
  for (std::size_t t = 0; t < x.dim(); ++t) out[t] = a * x[t];
  return out;
}

QVector operator*(const Scalar& s, const QVector& x) {
  QVector out(x.dim());
  for (std::size_t t = 0; t < x.dim(); ++t) out[t] = s * x[t];
  return out;
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, Quat(1)); }

QMatrix QMatrix::scalar(std::size_t n, const Quat& a) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  return m;
}

QMatrix QMatrix::from_real(const RealMatrix& m) {
  if (m.rows() % 4 != 0 || m.cols() % 4 != 0) throw DimensionMismatch("QMatrix::from_real");
  QMatrix out(m.rows() / 4, m.cols() / 4);
  for (std::size_t s = 0; s < out.rows(); ++s)
    for (std::size_t t = 0; t < out.cols(); ++t) {
      Quat c;
      for (int a = 0; a < 4; ++a) c[a] = m(4 * s + a, 4 * t);  // image of 1 is c
      out(s, t) = c;
      if (realify(c) != m.block(4 * s, 4 * t, 4, 4))
        throw std::invalid_argument("real matrix is not H-linear (block is not a right multiplication)");
    }
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& q : e_)
    if (!q.is_zero()) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::conj() const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].conj();
  return out;
}

QMatrix QMatrix::embed(std::size_t n, std::size_t offset) const {
  if (rows_ != cols_ || offset + rows_ > n) throw DimensionMismatch("QMatrix::embed");
  QMatrix out(n, n);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(offset + r, offset + c) = (*this)(r, c);
  return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("QMatrix::block");
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("QMatrix sum");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("QMatrix difference");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = -a.e_[i];
  return out;
}

QMatrix operator*(const Scalar& s, const QMatrix& a) {
  QMatrix out = a;
  for (auto& q : out.e_) q *= s;
  return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("QMatrix product");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

QVector op_apply(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.dim()) throw DimensionMismatch("op_apply: A.cols != X.dim");
  QVector out(a.rows());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out[s] += x[t] * a(s, t);
  return out;
}

QMatrix compose(const QMatrix& a, const QMatrix& b) {
  return matmul(b.transpose(), a.transpose()).transpose();
}

QMatrix op_commutator(const QMatrix& a, const QMatrix& b) { return compose(a, b) - compose(b, a); }

RealMatrix realify(const Quat& c) {
  RealMatrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    const Quat img = Quat::unit(b) * c;
    for (int a = 0; a < 4; ++a) m(a, b) = img[a];
  }
  return m;
}

RealMatrix realify(const QMatrix& a) {
  RealMatrix m(4 * a.rows(), 4 * a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (!a(s, t).is_zero()) m.set_block(4 * s, 4 * t, realify(a(s, t)));
  return m;
}

RealMatrix left_multiplication(const Quat& c) {
  RealMatrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    const Quat img = c * Quat::unit(b);
    for (int a = 0; a < 4; ++a) m(a, b) = img[a];
  }
  return m;
}

RealMatrix left_multiplication(const Quat& c, std::size_t m) {
  RealMatrix out(4 * m, 4 * m);
  const RealMatrix blk = left_multiplication(c);
  for (std::size_t t = 0; t < m; ++t) out.set_block(4 * t, 4 * t, blk);
  return out;
}

}  // namespace holonomy
