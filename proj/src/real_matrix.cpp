#include "holonomy/real_matrix.hpp"

#include <ostream>
#include <stdexcept>

#include "holonomy/errors.hpp"

namespace holonomy {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RealVector RealMatrix::column(std::size_t c) const {
  RealVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RealMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

void RealMatrix::set_block(std::size_t r0, std::size_t c0, const RealMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw DimensionMismatch("set_block out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

RealMatrix RealMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                             std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block out of range");
  RealMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RealMatrix& RealMatrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

void RealMatrix::add_scaled(const Scalar& s, const RealMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix axpy");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += s * o.data_[i];
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  RealMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RealVector operator*(const RealMatrix& a, const RealVector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  RealVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const RealMatrix& m) {
  for (std::size_t r = 0; r < m.rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

RealMatrix commutator(const RealMatrix& a, const RealMatrix& b) { return a * b - b * a; }

RealMatrix inverse(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RealMatrix a = m;
  RealMatrix inv = RealMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const Scalar p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

namespace {

// Symmetric Gaussian elimination with 2x2 fallbacks avoided: diagonal pivoting
// works for definite matrices; for the indefinite case we congruence-transform
// a zero pivot by adding a later basis vector.
std::vector<Scalar> congruence_diagonal(RealMatrix a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> diag;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(a(k, j)) == 0) ++j;
      if (j == n) {
        diag.push_back(0);
        continue;
      }
      // e_k <- e_k + t e_j with t chosen so the new diagonal is non-zero
      Scalar t = 1;
      if (sgn(a(j, j) + 2 * a(k, j)) == 0) t = -1;
      for (std::size_t c = 0; c < n; ++c) a(k, c) += t * a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, k) += t * a(r, j);
    }
    const Scalar p = a(k, k);
    diag.push_back(p);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Scalar f = a(r, k) / p;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) a(c, r) = a(r, c);
  }
  return diag;
}

}  // namespace

bool is_positive_definite(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("definiteness of non-square matrix");
  if (m != m.transpose()) return false;
  // Leading principal pivots of an LDL^T without pivoting: all positive iff PD.
  RealMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Scalar f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return true;
}

std::pair<std::size_t, std::size_t> signature(const RealMatrix& m) {
  if (m.rows() != m.cols() || m != m.transpose())
    throw std::invalid_argument("signature needs a symmetric matrix");
  std::size_t pos = 0, neg = 0;
  for (const auto& d : congruence_diagonal(m)) {
    if (sgn(d) > 0) ++pos;
    if (sgn(d) < 0) ++neg;
  }
  return {pos, neg};
}

Scalar dot(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace holonomy
