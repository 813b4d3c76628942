#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/hermitian_space.hpp"
#include "holonomy/linalg.hpp"
#include "holonomy/subspace.hpp"

namespace holonomy {

/// (a, A, X, b) in sp(1,n+1)_Hp: p -> a p, Y -> -g(Y,X) p + A Y, q -> b p + X - conj(a) q.
struct ParabolicElement {
  Quat a;
  QMatrix A;
  QVector X;
  Quat b;

  static ParabolicElement zero(std::size_t n) { return {Quat(), QMatrix(n, n), QVector(n), Quat()}; }
  static ParabolicElement scalar_part(std::size_t n, const Quat& a);
  static ParabolicElement matrix_part(const QMatrix& A);
  static ParabolicElement translation(const QVector& X);
  static ParabolicElement center(std::size_t n, const Quat& b);
  /// The grading element (1, 0, 0, 0).
  static ParabolicElement grading(std::size_t n) { return scalar_part(n, Quat(1)); }

  std::size_t n() const { return X.dim(); }
  bool is_zero() const { return a.is_zero() && A.is_zero() && X.is_zero() && b.is_zero(); }

  /// Flat real coordinates: a (4), A (4n^2, row-major), X (4n), b (4).
  RealVector coordinates() const;
  static ParabolicElement from_coordinates(std::size_t n, const RealVector& v);

  ParabolicElement& operator+=(const ParabolicElement& o);
  ParabolicElement& operator-=(const ParabolicElement& o);
  friend ParabolicElement operator+(ParabolicElement u, const ParabolicElement& v) { return u += v; }
  friend ParabolicElement operator-(ParabolicElement u, const ParabolicElement& v) { return u -= v; }
  friend ParabolicElement operator*(const Scalar& s, const ParabolicElement& u);
  friend bool operator==(const ParabolicElement& u, const ParabolicElement& v) {
    return u.a == v.a && u.A == v.A && u.X == v.X && u.b == v.b;
  }
  friend bool operator!=(const ParabolicElement& u, const ParabolicElement& v) { return !(u == v); }
};

/// Quaternion matrix over (p, e_1..e_n, q) of the endomorphism.
QMatrix to_qmatrix(const HermitianSpace& space, const ParabolicElement& u);
/// Realified (4n+8) x (4n+8) matrix.
RealMatrix to_matrix(const HermitianSpace& space, const ParabolicElement& u);
/// Inverse of to_matrix; throws std::invalid_argument if the matrix is not of that form.
ParabolicElement from_matrix(const HermitianSpace& space, const RealMatrix& m);

/// True iff A is in sp(n) and b is imaginary.
bool is_valid(const HermitianSpace& space, const ParabolicElement& u);
bool in_sp(const HermitianSpace& space, const QMatrix& A);

/// True iff m is eta-skew and commutes with I1, I2, I3 on the full space.
bool is_quaternionic_skew(const HermitianSpace& space, const RealMatrix& m);

/// Structural bracket from the bracket table.
ParabolicElement bracket(const HermitianSpace& space, const ParabolicElement& u, const ParabolicElement& v);

/// Bivector sum c_ij e_i ^ e_j (i < j) over the real basis; (u^v)w = eta(u,w)v - eta(v,w)u.
struct Bivector {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> terms;  ///< sorted, non-zero
  bool is_zero() const { return terms.empty(); }
  Scalar coefficient(std::size_t i, std::size_t j) const;
};

Bivector to_bivector(const HermitianSpace& space, const RealMatrix& endo);
Bivector to_bivector(const HermitianSpace& space, const ParabolicElement& u);
/// Endomorphism induced by a bivector through eta.
RealMatrix bivector_to_matrix(const HermitianSpace& space, const Bivector& w);

struct Grading {
  ParabolicElement g0, g1, g2;
};
Grading grading_decompose(const ParabolicElement& u);

/// Element (a0, a1 + A, X) of sim H^n = (R + sp(1) + sp(n)) x H^n.
struct SimElement {
  Scalar a0;
  Quat a1;  ///< imaginary
  QMatrix A;
  QVector X;
  friend bool operator==(const SimElement& s, const SimElement& t) {
    return s.a0 == t.a0 && s.a1 == t.a1 && s.A == t.A && s.X == t.X;
  }
};

SimElement f_projection(const ParabolicElement& u);
/// Affine (4n+1) x (4n+1) matrix [[a0 - L_{a1} + Op(A), X], [0, 0]] of the action on H^n.
RealMatrix to_affine(const SimElement& s);
/// Bracket in sim H^n, computed from the affine realization.
SimElement sim_bracket(const SimElement& s, const SimElement& t);

/// R-basis of sp(n) for the Gram matrix of `space`.
std::vector<QMatrix> sp_basis(const HermitianSpace& space);
/// sp(m) for the identity Gram matrix.
std::vector<QMatrix> sp_basis(std::size_t m);
/// Basis of sp(1,n+1)_Hp: a over 1,i,j,k; sp(n); X = e_t i_alpha; b over i,j,k.
std::vector<ParabolicElement> parabolic_basis(const HermitianSpace& space);

/// sp(1) ~ ImH sits in sp(1,n+1)_Hp as x -> (-x, 0, 0, 0).
ParabolicElement sp1_embed(std::size_t n, const Quat& x);

struct FamilySpec;

/// Subalgebra of sp(1,n+1)_Hp with an exact basis.
class Subalgebra {
 public:
  Subalgebra(std::shared_ptr<const HermitianSpace> space, const std::vector<ParabolicElement>& generators);

  const HermitianSpace& space() const { return *space_; }
  std::shared_ptr<const HermitianSpace> space_ptr() const { return space_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ParabolicElement>& basis() const { return basis_; }
  std::vector<RealMatrix> matrices() const;

  bool contains(const ParabolicElement& u) const;
  /// Coordinates with respect to basis(), or nullopt.
  std::optional<RealVector> coords(const ParabolicElement& u) const;
  /// First basis pair whose bracket leaves the span, if any.
  std::optional<std::pair<std::size_t, std::size_t>> closure_violation() const;
  bool is_closed() const { return !closure_violation().has_value(); }

  /// Projections to the summands R+sp(1) (the a part), sp(n), H^n and ImH.
  std::vector<Quat> pr_H() const;
  std::vector<QMatrix> pr_sp() const;
  RealSubspace pr_Hn() const;
  std::vector<Quat> pr_ImH() const;
  /// dim_R of the span of the a parts.
  std::size_t pr_H_dim() const;

  // Family metadata (set by family_g).
  std::string label;
  bool side_conditions_ok = true;
  std::vector<std::string> side_condition_notes;

 private:
  std::shared_ptr<const HermitianSpace> space_;
  std::vector<ParabolicElement> basis_;
  std::shared_ptr<const Coordinates> coordinates_;
};

enum class H0 { zero, Ri, sp1 };

/// Declarative description of one of g1..g9. sp(1) values (h0, phi) are given as
/// imaginary quaternions and embedded through sp1_embed.
struct FamilySpec {
  int family = 1;  ///< 1..9
  std::size_t m = 0, m1 = 0, m2 = 0, k = 0;
  std::vector<QMatrix> h_generators;   ///< basis of h in sp(m) (sp(k) for g9)
  H0 h0 = H0::zero;
  std::vector<Quat> phi_values;        ///< phi: h -> sp(1)
  std::vector<Scalar> varphi_values;   ///< varphi: h -> R
  std::vector<QVector> psi_values;     ///< psi: h -> U (g9)
  Scalar alpha = 0;                    ///< g5
  std::vector<BBlock> lprime;          ///< g6, g9
  std::vector<QVector> U;              ///< g9: U inside L(m,m1,m2,L')

  std::string name() const { return "g" + std::to_string(family); }
};

/// Builds the family algebra. Violated structural conditions throw ValidationError
/// naming the clause; sub-case side conditions only clear side_conditions_ok.
/// Throws std::logic_error if the result is not bracket-closed.
Subalgebra family_g(const FamilySpec& spec, std::shared_ptr<const HermitianSpace> space);

/// The documented minimal instantiation of family 1..9 (n = 1 for g1..g5, n = 2 for g6..g9).
std::pair<FamilySpec, std::shared_ptr<const HermitianSpace>> minimal_family(int family);

/// R(1,0,0,0) + (H^n + ImH): dim_R pr_H = 1.
Subalgebra lemma1_algebra(std::shared_ptr<const HermitianSpace> space);
/// R(1,0,0,aj+bk) + R(i,0,0,bj-ak) + C^n + R(0,0,0,i) (bracket-closed form).
Subalgebra twisted_algebra(std::shared_ptr<const HermitianSpace> space, const Scalar& alpha, const Scalar& beta);
/// Generators R(1,0,0,aj+bk), R(i,0,0,-bj+ak), C^n, R(0,0,0,i) exactly as written.
std::vector<ParabolicElement> twisted_literal_generators(std::size_t n, const Scalar& alpha, const Scalar& beta);

}  // namespace holonomy
