#pragma once

#include <cstddef>
#include <vector>

#include "holonomy/quat.hpp"
#include "holonomy/real_matrix.hpp"

namespace holonomy {

/// Element of H^m stored as its column of LEFT coordinates: X = sum_t X_t e_t.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : coords_(dim) {}
  explicit QVector(std::vector<Quat> coords) : coords_(std::move(coords)) {}

  /// x * e_t in H^dim.
  static QVector basis(std::size_t dim, std::size_t t, const Quat& x = Quat(1));
  /// Inverse of realify(): groups of four reals per coordinate.
  static QVector from_real(const RealVector& v);

  std::size_t dim() const { return coords_.size(); }
  const Quat& operator[](std::size_t t) const { return coords_[t]; }
  Quat& operator[](std::size_t t) { return coords_[t]; }
  const std::vector<Quat>& coords() const { return coords_; }
  bool is_zero() const;

  /// Coordinates of X in the real basis e_1, I1 e_1, I2 e_1, I3 e_1, e_2, ...
  RealVector realify() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator-(const QVector& a);
  /// Scalar action a.X: every coordinate is multiplied on the left.
  friend QVector operator*(const Quat& a, const QVector& x);
  friend QVector operator*(const Scalar& s, const QVector& x);
  friend bool operator==(const QVector& a, const QVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }

 private:
  std::vector<Quat> coords_;
};

/// Quaternionic matrix. It acts on QVector only through op_apply.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// a * E_n
  static QMatrix scalar(std::size_t n, const Quat& a);
  /// Real 4m x 4m matrix back to quaternion entries; the matrix must be
  /// block-wise a right multiplication (throws std::invalid_argument otherwise).
  static QMatrix from_real(const RealMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Quat& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Quat& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  bool is_zero() const;

  QMatrix transpose() const;
  QMatrix conj() const;

  /// Embeds this matrix as the diagonal block starting at `offset` of an n x n zero matrix.
  QMatrix embed(std::size_t n, std::size_t offset) const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator-(const QMatrix& a);
  friend QMatrix operator*(const Scalar& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quat> e_;
};

/// Plain entrywise product A*B in the written order (no Op convention).
QMatrix matmul(const QMatrix& a, const QMatrix& b);

/// Op(A) X = (X^t A^t)^t, i.e. (Op(A) X)_s = sum_t X_t A_st.
QVector op_apply(const QMatrix& a, const QVector& x);

/// Matrix of Op(A) o Op(B): (B^t A^t)^t.
QMatrix compose(const QMatrix& a, const QMatrix& b);

/// Commutator of Op(A) and Op(B) as endomorphisms.
QMatrix op_commutator(const QMatrix& a, const QMatrix& b);

/// 4x4 real matrix of x -> x c in the basis 1, i, j, k.
RealMatrix realify(const Quat& c);
/// Block matrix of realify(A_st): the real form of Op(A).
RealMatrix realify(const QMatrix& a);
/// 4x4 real matrix of x -> c x (the complex structures I_alpha for c = i, j, k).
RealMatrix left_multiplication(const Quat& c);
/// Block diagonal left multiplication by c on H^m.
RealMatrix left_multiplication(const Quat& c, std::size_t m);

}  // namespace holonomy
