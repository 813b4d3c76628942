#include "holonomy/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "holonomy/errors.hpp"

namespace holonomy {

SparseRow to_sparse(const RealVector& v) {
  SparseRow r;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (sgn(v[c]) != 0) r.emplace_back(c, v[c]);
  return r;
}

RealVector to_dense(const SparseRow& r, std::size_t ncols) {
  RealVector v(ncols);
  for (const auto& [c, x] : r) v.at(c) = x;
  return v;
}

RowEchelon::RowEchelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseRow RowEchelon::reduce(const SparseRow& row) const {
  // Stored rows vanish on every other pivot column, so subtracting them never
  // changes the coefficient at a pivot: only the input's own pivot entries matter.
  std::vector<Scalar> acc(ncols_);
  std::vector<char> touched(ncols_, 0);
  std::vector<std::size_t> support;
  auto touch = [&](std::size_t c) {
    if (!touched[c]) {
      touched[c] = 1;
      support.push_back(c);
    }
  };
  for (const auto& [c, x] : row) {
    if (c >= ncols_) throw DimensionMismatch("RowEchelon: column out of range");
    if (pivot_row_[c] >= 0) continue;
    acc[c] += x;
    touch(c);
  }
  for (const auto& [c, f] : row) {
    if (pivot_row_[c] < 0) continue;
    for (const auto& [col, x] : rows_[pivot_row_[c]]) {
      if (col == c) continue;
      acc[col] -= f * x;
      touch(col);
    }
  }
  std::sort(support.begin(), support.end());
  SparseRow out;
  for (auto c : support)
    if (sgn(acc[c]) != 0) out.emplace_back(c, std::move(acc[c]));
  return out;
}

bool RowEchelon::add_row(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  const std::size_t p = r.front().first;
  const Scalar inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;

  // Eliminate the new pivot column from the existing rows.
  for (auto& old : rows_) {
    auto it = std::lower_bound(old.begin(), old.end(), p,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == old.end() || it->first != p) continue;
    const Scalar f = it->second;
    SparseRow merged;
    merged.reserve(old.size() + r.size());
    auto a = old.begin();
    auto b = r.begin();
    while (a != old.end() || b != r.end()) {
      if (b == r.end() || (a != old.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == old.end() || b->first < a->first) {
        merged.emplace_back(b->first, -f * b->second);
        ++b;
      } else {
        Scalar v = a->second - f * b->second;
        if (sgn(v) != 0) merged.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    old = std::move(merged);
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  row_pivot_.push_back(p);
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p = row_pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseRow> RowEchelon::basis() const {
  std::vector<SparseRow> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]]);
  return out;
}

std::vector<SparseRow> RowEchelon::nullspace() const {
  // Column -> list of (pivot column, coefficient) over the stored rows.
  std::vector<SparseRow> by_free(ncols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, x] : rows_[r])
      if (c != row_pivot_[r]) by_free[c].emplace_back(row_pivot_[r], -x);
  std::vector<SparseRow> out;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    SparseRow v = std::move(by_free[f]);
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const std::vector<RealVector>& vectors) {
  if (vectors.empty()) return 0;
  RowEchelon e(vectors.front().size());
  for (const auto& v : vectors) e.add_row(v);
  return e.rank();
}

std::vector<RealVector> nullspace(const RealMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
    e.add_row(row);
  }
  std::vector<RealVector> out;
  for (const auto& v : e.nullspace()) out.push_back(to_dense(v, m.cols()));
  return out;
}

std::optional<RealVector> solve(const RealMatrix& m, const RealVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  // Rows [M | -b]. The system is consistent iff the last column is free; then
  // set it to 1 and every other free variable to 0.
  const std::size_t last = m.cols();
  RowEchelon e(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
    if (sgn(b[r]) != 0) row.emplace_back(last, -b[r]);
    e.add_row(row);
  }
  RealVector x(m.cols());
  for (const auto& row : e.basis()) {
    const std::size_t p = row.front().first;
    if (p == last) return std::nullopt;
    if (row.back().first == last) x[p] = -row.back().second;
  }
  return x;
}

std::vector<RealVector> span_basis(const std::vector<RealVector>& vectors, std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("span_basis: vector length");
    e.add_row(v);
  }
  std::vector<RealVector> out;
  for (const auto& r : e.basis()) out.push_back(to_dense(r, dim));
  return out;
}

std::vector<RealVector> intersect(const std::vector<RealVector>& a,
                                  const std::vector<RealVector>& b, std::size_t dim) {
  const auto ba = span_basis(a, dim);
  const auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; the intersection is spanned by sum x_i a_i.
  RealMatrix m(dim, ba.size() + bb.size());
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = ba[i][r];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, ba.size() + j) = -bb[j][r];
  std::vector<RealVector> vecs;
  for (const auto& x : nullspace(m)) {
    RealVector v(dim);
    for (std::size_t i = 0; i < ba.size(); ++i)
      if (sgn(x[i]) != 0)
        for (std::size_t r = 0; r < dim; ++r) v[r] += x[i] * ba[i][r];
    vecs.push_back(std::move(v));
  }
  return span_basis(vecs, dim);
}

Coordinates::Coordinates(std::vector<RealVector> basis, std::size_t dim)
    : basis_(std::move(basis)), dim_(dim), echelon_(dim + basis_.size()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].size() != dim_) throw DimensionMismatch("Coordinates: vector length");
    SparseRow row = to_sparse(basis_[i]);
    row.emplace_back(dim_ + i, Scalar(1));
    echelon_.add_row(row);
  }
  for (const auto p : echelon_.pivots())
    if (p >= dim_) throw std::invalid_argument("Coordinates: basis is linearly dependent");
}

std::optional<RealVector> Coordinates::coords(const RealVector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("Coordinates: vector length");
  // Reducing [v | 0] leaves [0 | -c] exactly when v = sum c_i b_i.
  const SparseRow r = echelon_.reduce(to_sparse(v));
  RealVector c(basis_.size());
  for (const auto& [col, x] : r) {
    if (col < dim_) return std::nullopt;
    c[col - dim_] = -x;
  }
  return c;
}

bool Coordinates::contains(const RealVector& v) const { return coords(v).has_value(); }

}  // namespace holonomy
