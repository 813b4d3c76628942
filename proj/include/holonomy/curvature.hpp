#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/lie_algebra.hpp"

namespace holonomy {

/// Number of basis bivectors e_i ^ e_j, i < j, of R^N and their lexicographic index.
inline std::size_t pair_count(std::size_t N) { return N * (N - 1) / 2; }
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t N);
std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t N);

/// Linear map from bivectors of R^N to N x N matrices, stored on e_i ^ e_j with i < j.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(std::size_t N = 0);

  std::size_t dim() const { return N_; }
  /// R(e_i, e_j) with R(e_j, e_i) = -R(e_i, e_j).
  RealMatrix operator()(std::size_t i, std::size_t j) const;
  const RealMatrix& stored(std::size_t pair) const { return values_[pair]; }
  /// Sets R(e_i, e_j) (i != j); R(e_j, e_i) follows by antisymmetry.
  void set(std::size_t i, std::size_t j, const RealMatrix& value);
  /// R(u, v) for arbitrary vectors.
  RealMatrix eval(const RealVector& u, const RealVector& v) const;

  bool is_zero() const;
  CurvatureTensor& operator+=(const CurvatureTensor& o);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator*(const Scalar& s, const CurvatureTensor& r);
  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
    return a.N_ == b.N_ && a.values_ == b.values_;
  }
  /// All stored entries, pair-major.
  RealVector flatten() const;

 private:
  std::size_t N_;
  std::vector<RealMatrix> values_;
};

/// Exact basis of R(g) in coefficient form: unknown index pair * d + k is the
/// coefficient of generator k in R(e_i, e_j).
struct CurvatureSpace {
  std::size_t N = 0;
  std::vector<RealMatrix> generators;
  std::vector<SparseRow> basis;
  std::size_t equations = 0;

  std::size_t dim() const { return basis.size(); }
  CurvatureTensor tensor(std::size_t index) const;
  /// Coordinates of R(e_i, e_j) over the generators for basis tensor `index`.
  RealVector value_coords(std::size_t index, std::size_t pair) const;
};

/// Solves {R : bivectors -> span(gens), first Bianchi identity}. Throws
/// std::invalid_argument for a generator that is not eta-skew, DimensionMismatch for sizes.
CurvatureSpace solve_R(const std::vector<RealMatrix>& gens, const RealMatrix& eta);
CurvatureSpace solve_R(const Subalgebra& g);

/// P(h) = {P : R^N -> h, eta(P(x)y,z) + eta(P(y)z,x) + eta(P(z)x,y) = 0}; unknown a * d + k.
struct PSpace {
  std::size_t N = 0;
  std::vector<RealMatrix> generators;
  std::vector<SparseRow> basis;

  std::size_t dim() const { return basis.size(); }
  /// Values P(e_a), a = 0..N-1.
  std::vector<RealMatrix> tensor(std::size_t index) const;
};

PSpace solve_P(const std::vector<RealMatrix>& gens, const RealMatrix& eta);

/// Realified sp(n) basis acting on R^{4n}.
std::vector<RealMatrix> sp_generators(const HermitianSpace& space);

bool satisfies_bianchi(const CurvatureTensor& r, std::array<std::size_t, 3>* violation = nullptr);
bool satisfies_cyclic_P(const std::vector<RealMatrix>& p, const RealMatrix& eta);

struct IdentityReport {
  bool bianchi = true;
  std::optional<std::array<std::size_t, 3>> bianchi_violation;
  bool eq_star = true;        ///< eta(R(u,v)z,w) = eta(R(z,w)u,v)
  bool sym_R = true;          ///< eta^eta(R(u^v), z^w) symmetric
  bool ri = true;             ///< R(I_a X, Y) = -R(X, I_a Y)
  bool ri_quaternionic = true;  ///< R(xX, Y) = R(X, conj(x) Y)
  bool triple_star = true;    ///< R(q,iq) = -R(jq,kq), ..., R(I_r p, I_s p) = R(I_r p, X) = 0
  bool all() const { return bianchi && eq_star && sym_R && ri && ri_quaternionic && triple_star; }
};

IdentityReport check_curvature_identities(const HermitianSpace& space, const CurvatureTensor& r);

struct BergerReport {
  bool is_berger = false;
  std::size_t dim_g = 0;
  std::size_t dim_R = 0;
  std::size_t span_dim = 0;
  /// X component of R(q, jq) vanishes for every R in R(g).
  bool s02_zero = true;
};

BergerReport berger_check(const Subalgebra& g);
BergerReport berger_check(const Subalgebra& g, const CurvatureSpace& rspace);

/// Free data of the curvature tensors of sp(1,n+1)_Hp.
struct Prop1Params {
  Quat C01, C02;
  std::array<QMatrix, 3> A0;             ///< A01, A02, A03 in sp(n)
  QVector S01, S02;
  CurvatureTensor Rprime;                ///< in R(sp(n)) on R^{4n}
  std::vector<RealMatrix> P0;            ///< P0(e_a) in sp(n), a = 0..4n-1
  std::array<Scalar, 5> d;

  static Prop1Params zero(std::size_t n);
};

/// Derived components, antisymmetric in (r, s): C_rs, D_rs, S_rs.
std::array<std::array<Quat, 4>, 4> prop1_C(const Prop1Params& params);
std::array<std::array<Quat, 4>, 4> prop1_D(const Prop1Params& params);
std::array<std::array<QVector, 4>, 4> prop1_S(const Prop1Params& params);
/// theta_0(X) = 1/2 sum_a i_a g(X, S_0a) and theta_s(X) = -theta_0(I_s X).
Quat prop1_theta(const Prop1Params& params, const HermitianSpace& space, int s, const QVector& X);

/// Throws ValidationError if Rprime or P0 is not in R(sp(n)) resp. P(sp(n)).
CurvatureTensor prop1_construct(const Prop1Params& params, const HermitianSpace& space);

struct LPReport {
  bool l_p0 = true;    ///< eta(L(Y,Z),X) = eta(P0(X)Y,Z)
  bool tau_a = true;   ///< eta(I_r tau(X,Y) p, I_s q) = eta(A_rs X, Y)
  bool theta_s = true; ///< eta(I_r theta_s(X) p, I_t q) = eta(I_s S_rt, X)
  bool b_c = true;     ///< eta(I_t B_rs p, I_t1 q) = eta(I_r C_tt1 p, I_s q)
  bool all() const { return l_p0 && tau_a && theta_s && b_c; }
};

/// Reads the Prop-1 components back from the tensor and checks the contraction identities.
LPReport check_LP(const HermitianSpace& space, const CurvatureTensor& r);

struct Prop1RankReport {
  std::size_t dim_sp = 0, dim_R_sp = 0, dim_P_sp = 0;
  std::size_t parameter_count = 0;
  std::size_t rank = 0;
  std::size_t dim_R = 0;           ///< dim solve_R(sp(1,n+1)_Hp)
  bool images_satisfy_bianchi = true;
  bool images_in_solution_space = true;
  bool all() const {
    return rank == parameter_count && rank == dim_R && images_satisfy_bianchi && images_in_solution_space;
  }
};

/// One Prop1Params per free parameter direction, in the order C01, C02, d, A0, S01, S02, R', P0.
std::vector<Prop1Params> prop1_parameter_basis(const HermitianSpace& space);
Prop1RankReport prop1_rank_check(const HermitianSpace& space);

}  // namespace holonomy
