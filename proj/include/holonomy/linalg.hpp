#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holonomy/real_matrix.hpp"

namespace holonomy {

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

SparseRow to_sparse(const RealVector& v);
RealVector to_dense(const SparseRow& r, std::size_t ncols);

/// Incrementally maintained reduced row-echelon form over Q.
///
/// Rows are fully reduced: a stored row has a 1 in its pivot column and zeros
/// in every other pivot column. The pivot of a new row is its lowest
/// surviving column, so the result is independent of insertion order up to
/// the set of pivots, and identical for identical input sequences.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols = 0);

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true iff the row increased the rank.
  bool add_row(const SparseRow& row);
  bool add_row(const RealVector& row) { return add_row(to_sparse(row)); }

  /// Residual of `row` modulo the row space (zero iff contained).
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  bool contains(const RealVector& row) const { return contains(to_sparse(row)); }

  /// Basis of {x : r . x = 0 for every stored row r}, one vector per free column
  /// in increasing order.
  std::vector<SparseRow> nullspace() const;

  /// Stored rows in pivot order.
  std::vector<SparseRow> basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t ncols_;
  std::vector<long> pivot_row_;                  // column -> row index or -1
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> row_pivot_;
};

/// Rank of a list of vectors of equal length.
std::size_t rank(const std::vector<RealVector>& vectors);

/// Basis of the solution space of M x = 0.
std::vector<RealVector> nullspace(const RealMatrix& m);

/// Some x with M x = b, or nullopt.
std::optional<RealVector> solve(const RealMatrix& m, const RealVector& b);

/// An exact basis (RREF rows) for the span of `vectors` in R^dim.
std::vector<RealVector> span_basis(const std::vector<RealVector>& vectors, std::size_t dim);

/// Basis of span(a) ∩ span(b) in R^dim.
std::vector<RealVector> intersect(const std::vector<RealVector>& a,
                                  const std::vector<RealVector>& b, std::size_t dim);

/// Coordinates relative to a fixed, linearly independent list of vectors.
class Coordinates {
 public:
  /// Throws std::invalid_argument if `basis` is dependent.
  Coordinates(std::vector<RealVector> basis, std::size_t dim);

  std::size_t size() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<RealVector>& basis() const { return basis_; }

  bool contains(const RealVector& v) const;
  /// c with v = sum c_i basis_i, or nullopt if v is not in the span.
  std::optional<RealVector> coords(const RealVector& v) const;

 private:
  std::vector<RealVector> basis_;
  std::size_t dim_;
  RowEchelon echelon_;  // rows [basis_i | e_i] reduced on the first dim_ columns
};

}  // namespace holonomy
