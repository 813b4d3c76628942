#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/curvature.hpp"

namespace holonomy {

/// (xi . R)(x, y) = [xi, R(x, y)] - R(xi x, y) - R(x, xi y) on every basis bivector.
CurvatureTensor act_on_R(const RealMatrix& xi, const CurvatureTensor& r);
CurvatureTensor act_on_R(const HermitianSpace& space, const ParabolicElement& xi, const CurvatureTensor& r);

struct SymmetricViolation {
  std::size_t xi;  ///< index into g.basis()
  std::size_t x, y;
};

struct SymmetricReport {
  std::size_t dim_g = 0;
  std::size_t span_dim = 0;
  bool spans = false;
  bool annihilated = true;
  /// First violating basis pair for every basis element of g that does not annihilate R.
  std::vector<SymmetricViolation> certificate;
  /// Components that a symmetric pair forces to vanish but are non-zero here
  /// ("C", "B", "R'", "L", "P0", "A0s").
  std::vector<std::string> obstructions;
  bool symmetric() const { return spans && annihilated; }
};

/// Throws ValidationError if R is not in R(g).
SymmetricReport is_symmetric_pair(const Subalgebra& g, const CurvatureTensor& r);

struct SymmetricPair {
  Subalgebra g;
  CurvatureTensor R;
  Prop1Params params;
};

/// Gram [[1, -k/2], [k/2, 1]], g = L' x ImH with L' = span{e1, e2, j e1 + i e2},
/// R from S01 = e1, S02 = -e2.
SymmetricPair exemplar_n2();

/// Full-space vector q' = -1/2 g(X,X) p + X + q.
QVector shifted_q(const HermitianSpace& space, const QVector& X);

/// D'_rs = D_rs - theta_s(I_r X) + theta_r(I_s X) - g(X, S_rs) + g(S_rs, X), antisymmetric.
std::array<std::array<Quat, 4>, 4> change_base_q(const Prop1Params& params, const HermitianSpace& space,
                                                 const QVector& X);

/// Some X with D'_01 = D'_02 = 0, or nullopt.
std::optional<QVector> solve_base_change(const Prop1Params& params, const HermitianSpace& space);

/// R in the basis p, e'_t = e_t - g(e_t, X) p, q' (same Gram matrix).
CurvatureTensor transform_basis(const HermitianSpace& space, const CurvatureTensor& r, const QVector& X);

struct NonExistenceReport {
  std::string L;                 ///< "ImH" or "C"
  std::size_t s_equation_solutions = 0;  ///< dim of S solving 2 Im g(Y,S_0s) = theta_0(I_s Y) - theta_s(Y) with S_rs in L
  std::size_t pair_solutions = 0;  ///< dim of (S, d) with R in R(L x ImH) and xi . R = 0
  bool S_zero = false;           ///< every solution of both systems has S = 0
};

/// n = 1: L = ImH e1 (which = "ImH") or L = C e1 (which = "C").
NonExistenceReport n1_nonexistence(const std::string& which);

}  // namespace holonomy
