#pragma once

#include <cstddef>
#include <vector>

#include "holonomy/hermitian_space.hpp"
#include "holonomy/linalg.hpp"

namespace holonomy {

/// Real subspace of H^n, stored as an R-independent list of QVectors.
class RealSubspace {
 public:
  explicit RealSubspace(std::size_t ambient_n = 0) : n_(ambient_n) {}
  /// Keeps the vectors that increase the rank, in order.
  static RealSubspace span(std::size_t ambient_n, const std::vector<QVector>& vectors);
  static RealSubspace from_real(std::size_t ambient_n, const std::vector<RealVector>& vectors);
  static RealSubspace whole(std::size_t ambient_n);

  std::size_t ambient_n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  std::vector<RealVector> real_basis() const;

  bool contains(const QVector& x) const;
  bool contains(const RealSubspace& other) const;
  friend bool operator==(const RealSubspace& a, const RealSubspace& b);

  /// c L for a quaternion c.
  RealSubspace left_multiply(const Quat& c) const;
  RealSubspace operator+(const RealSubspace& o) const;
  RealSubspace intersect(const RealSubspace& o) const;
  /// span_H of the subspace.
  RealSubspace quaternionic_span() const;

 private:
  std::size_t n_;
  std::vector<QVector> basis_;
};

/// { X in v : g(X, w) = 0 for all w in w_space }.
RealSubspace g_orthogonal_in(const HermitianSpace& space, const RealSubspace& v,
                             const RealSubspace& w_space);
/// True iff g(X, Y) = 0 for all X in a, Y in b.
bool g_orthogonal(const HermitianSpace& space, const RealSubspace& a, const RealSubspace& b);

/// B(l) = span{f_1..f_l, i f_1 + j f_2, ..., i f_{l-1} + j f_l} with f_r = e_{indices[r]}
/// (0-based) inside H^n.
RealSubspace build_B(std::size_t n, const std::vector<std::size_t>& indices);
/// B(l) on f_r = e_r inside H^l.
RealSubspace build_B(std::size_t l);

/// A(2l-1) with f_r = e_{indices[r]}; indices.size() = 2l-1, l >= 2.
RealSubspace build_A(std::size_t n, const std::vector<std::size_t>& indices);
/// A(2l-1) on f_r = e_r inside H^{2l-1}; the argument is 2l-1.
RealSubspace build_A(std::size_t two_l_minus_1);

/// One B(l) block of L' given by the (0-based) indices of f_1..f_l.
struct BBlock {
  std::vector<std::size_t> indices;
  static BBlock interval(std::size_t l, std::size_t offset);
};

/// H^m + ImH^{m1} + C^{m2} + L'. Throws ValidationError for overlapping or
/// out-of-range indices, blocks shorter than 2, or non-orthogonal summands.
RealSubspace build_L(const HermitianSpace& space, std::size_t m, std::size_t m1, std::size_t m2,
                     const std::vector<BBlock>& lprime);

/// rho(L') = span{X, Y, jX - iY : X, Y, jX - iY in L'}.
RealSubspace rho_closure(const RealSubspace& lp);

struct LDecomposition {
  RealSubspace l1;     ///< largest quaternionic subspace
  RealSubspace l5;     ///< iU + jU + kU, U = iL2 ∩ jL2 ∩ kL2
  RealSubspace l4c;    ///< i L4 ∩ L4
  RealSubspace lrest;  ///< orthogonal remainder of L4c in L4
  RealSubspace u;
};

LDecomposition decompose_L(const HermitianSpace& space, const RealSubspace& l);

}  // namespace holonomy
