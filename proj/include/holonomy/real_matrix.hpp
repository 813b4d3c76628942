#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "holonomy/scalar.hpp"

namespace holonomy {

using RealVector = std::vector<Scalar>;

/// Dense exact real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<Scalar>& flat() const { return data_; }

  RealVector column(std::size_t c) const;
  RealMatrix transpose() const;
  bool is_zero() const;

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const RealMatrix& block);
  RealMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator-=(const RealMatrix& o);
  RealMatrix& operator*=(const Scalar& s);
  /// this += s * o
  void add_scaled(const Scalar& s, const RealMatrix& o);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
  friend RealMatrix operator*(RealMatrix a, const Scalar& s) { return a *= s; }
  friend RealMatrix operator*(const Scalar& s, RealMatrix a) { return a *= s; }
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend RealVector operator*(const RealMatrix& a, const RealVector& v);
  friend bool operator==(const RealMatrix& a, const RealMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RealMatrix& a, const RealMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const RealMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

RealMatrix commutator(const RealMatrix& a, const RealMatrix& b);

/// Exact inverse by Gauss-Jordan; throws std::domain_error if singular.
RealMatrix inverse(const RealMatrix& m);

/// True iff the symmetric matrix is positive definite (exact LDL^T pivots).
bool is_positive_definite(const RealMatrix& m);

/// (positive, negative) inertia counts of a non-degenerate symmetric matrix.
std::pair<std::size_t, std::size_t> signature(const RealMatrix& m);

Scalar dot(const RealVector& a, const RealVector& b);

}  // namespace holonomy
