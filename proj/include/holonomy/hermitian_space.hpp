#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "holonomy/qmatrix.hpp"

namespace holonomy {

/// H^{1,n+1} with basis p, e_1..e_n, q, where g(p,q) = 1, g(p,p) = g(q,q) = 0,
/// H^n is orthogonal to Hp + Hq and G is the Gram matrix of g on H^n.
///
/// Full-space vectors are QVectors of dimension n+2 with slots (p, e_1..e_n, q).
/// The real basis has index 4*slot + alpha for the vector i_alpha e_slot.
class HermitianSpace {
 public:
  /// Throws ValidationError if G is not Hermitian or g|H^n is not positive definite.
  static HermitianSpace make(std::size_t n, QMatrix gram);
  /// G = identity.
  static HermitianSpace standard(std::size_t n);

  std::size_t n() const { return n_; }
  /// Real dimension 4n + 8.
  std::size_t real_dim() const { return 4 * n_ + 8; }
  const QMatrix& gram() const { return gram_; }
  /// (n+2) x (n+2) Gram matrix over (p, e, q).
  const QMatrix& full_gram() const { return full_gram_; }

  static std::size_t p_index(int alpha) { return static_cast<std::size_t>(alpha); }
  std::size_t e_index(std::size_t t, int alpha) const { return 4 + 4 * t + static_cast<std::size_t>(alpha); }
  std::size_t q_index(int alpha) const { return 4 * (n_ + 1) + static_cast<std::size_t>(alpha); }

  /// g(X,Y) = sum X_s G_st conj(Y_t) on H^n.
  Quat g(const QVector& x, const QVector& y) const;
  /// g on the full space (vectors of dimension n+2).
  Quat g_full(const QVector& x, const QVector& y) const;
  Scalar eta(const QVector& x, const QVector& y) const { return g(x, y).re(); }

  /// 4n x 4n matrix of eta on H^n and (4n+8) x (4n+8) matrix on the full space.
  const RealMatrix& eta_matrix() const { return eta_inner_; }
  const RealMatrix& eta_full_matrix() const { return eta_full_; }
  const RealMatrix& eta_full_inverse() const { return eta_full_inv_; }

  /// eta(X,Y) + i eta(X,I1 Y) + j eta(X,I2 Y) + k eta(X,I3 Y), computed from the
  /// real matrix only. Works for H^n vectors and full-space vectors alike.
  Quat recover_g_from_eta(const QVector& x, const QVector& y) const;

  /// Left multiplication by i, j, k (alpha = 1..3) on the full real space.
  const RealMatrix& complex_structure(int alpha) const { return complex_[alpha - 1]; }

  /// Embeds an H^n vector into slots 1..n of the full space.
  QVector embed(const QVector& x) const;

 private:
  HermitianSpace() = default;

  std::size_t n_ = 0;
  QMatrix gram_;
  QMatrix full_gram_;
  RealMatrix eta_inner_;
  RealMatrix eta_full_;
  RealMatrix eta_full_inv_;
  std::array<RealMatrix, 3> complex_;
};

/// Real matrix of eta(X,Y) = Re(sum X_s G_st conj(Y_t)) in the basis i_alpha e_s.
RealMatrix eta_of_gram(const QMatrix& gram);

/// Data for the Gram matrix of L(m, m1, m2, L'). Unset forms are zero; `eta4`
/// defaults to the identity. Real matrices are indexed inside their block.
struct GramConditions {
  std::size_t m = 0, m1 = 0, m2 = 0, n = 0;
  std::array<RealMatrix, 3> w;  ///< skew forms w1, w2, w3 on R^{m1}
  QMatrix w_complex;            ///< skew C-bilinear w on C^{m2}; entries in R + Ri
  RealMatrix eta4;              ///< positive definite on the last n - m - m1 - m2 indices
  std::array<RealMatrix, 3> omega;
};

/// Block-diagonal G from conditions 1)-4). Throws ValidationError on a
/// malformed form (wrong size, not skew, not complex, eta4 not positive definite).
QMatrix gram_from_conditions(const GramConditions& c);

}  // namespace holonomy
