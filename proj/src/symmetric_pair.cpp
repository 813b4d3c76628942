#include "holonomy/symmetric_pair.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

CurvatureTensor act_on_R(const RealMatrix& xi, const CurvatureTensor& r) {
  const std::size_t N = r.dim();
  if (xi.rows() != N || xi.cols() != N) throw DimensionMismatch("act_on_R");
  CurvatureTensor out(N);
  std::vector<RealVector> cols(N);
  for (std::size_t x = 0; x < N; ++x) cols[x] = xi.column(x);
  for (std::size_t p = 0; p < pair_count(N); ++p) {
    const auto [x, y] = pair_at(p, N);
    RealVector ex(N), ey(N);
    ex[x] = 1;
    ey[y] = 1;
    RealMatrix v = commutator(xi, r.stored(p));
    v -= r.eval(cols[x], ey);
    v -= r.eval(ex, cols[y]);
    out.set(x, y, v);
  }
  return out;
}

CurvatureTensor act_on_R(const HermitianSpace& space, const ParabolicElement& xi, const CurvatureTensor& r) {
  return act_on_R(to_matrix(space, xi), r);
}

namespace {

bool nonzero_values(const CurvatureTensor& r, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                    const std::function<bool(const ParabolicElement&)>& part, const HermitianSpace& space) {
  for (const auto& [i, j] : pairs)
    if (part(from_matrix(space, r(i, j)))) return true;
  return false;
}

std::vector<std::string> obstructions(const HermitianSpace& space, const CurvatureTensor& r) {
  const std::size_t m = 4 * space.n();
  std::vector<std::pair<std::size_t, std::size_t>> qq, pq, xx, qx, q0q;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a < b) qq.emplace_back(space.q_index(a), space.q_index(b));
      pq.emplace_back(HermitianSpace::p_index(a), space.q_index(b));
    }
  for (std::size_t t = 0; t < m; ++t) {
    qx.emplace_back(space.q_index(0), 4 + t);
    for (std::size_t u = t + 1; u < m; ++u) xx.emplace_back(4 + t, 4 + u);
  }
  for (int s = 1; s < 4; ++s) q0q.emplace_back(space.q_index(0), space.q_index(s));

  std::vector<std::string> out;
  if (nonzero_values(r, qq, [](const ParabolicElement& u) { return !u.a.is_zero(); }, space)) out.push_back("C");
  if (nonzero_values(r, pq, [](const ParabolicElement& u) { return !u.b.is_zero(); }, space)) out.push_back("B");
  if (nonzero_values(r, xx, [](const ParabolicElement& u) { return !u.A.is_zero(); }, space)) out.push_back("R'");
  if (nonzero_values(r, xx, [](const ParabolicElement& u) { return !u.X.is_zero(); }, space)) out.push_back("L");
  if (nonzero_values(r, qx, [](const ParabolicElement& u) { return !u.A.is_zero(); }, space)) out.push_back("P0");
  if (nonzero_values(r, q0q, [](const ParabolicElement& u) { return !u.A.is_zero(); }, space)) out.push_back("A0s");
  return out;
}

}  // namespace

SymmetricReport is_symmetric_pair(const Subalgebra& g, const CurvatureTensor& r) {
  const HermitianSpace& space = g.space();
  const std::size_t N = space.real_dim();
  if (r.dim() != N) throw DimensionMismatch("is_symmetric_pair");
  if (!satisfies_bianchi(r)) throw ValidationError("is_symmetric_pair", "R violates the Bianchi identity");

  SymmetricReport rep;
  rep.dim_g = g.dim();
  RowEchelon span(g.dim());
  for (std::size_t p = 0; p < pair_count(N); ++p) {
    std::optional<RealVector> c;
    try {
      c = g.coords(from_matrix(space, r.stored(p)));
    } catch (const std::invalid_argument&) {
    }
    if (!c) throw ValidationError("is_symmetric_pair", "R takes values outside g");
    span.add_row(*c);
  }
  rep.span_dim = span.rank();
  rep.spans = rep.span_dim == rep.dim_g;

  const auto mats = g.matrices();
  std::vector<std::optional<SymmetricViolation>> found(mats.size());
  parallel_for(mats.size(), [&](std::size_t k) {
    const CurvatureTensor a = act_on_R(mats[k], r);
    for (std::size_t p = 0; p < pair_count(N); ++p)
      if (!a.stored(p).is_zero()) {
        const auto [x, y] = pair_at(p, N);
        found[k] = SymmetricViolation{k, x, y};
        return;
      }
  });
  for (const auto& f : found)
    if (f) rep.certificate.push_back(*f);
  rep.annihilated = rep.certificate.empty();
  if (!rep.symmetric()) rep.obstructions = obstructions(space, r);
  return rep;
}

namespace {

std::shared_ptr<const HermitianSpace> exemplar_space() {
  QMatrix g(2, 2);
  g(0, 0) = g(1, 1) = Quat(1);
  g(0, 1) = frac(-1, 2) * Quat::k();
  g(1, 0) = frac(1, 2) * Quat::k();
  return std::make_shared<const HermitianSpace>(HermitianSpace::make(2, g));
}

}  // namespace

SymmetricPair exemplar_n2() {
  auto space = exemplar_space();
  std::vector<ParabolicElement> gens;
  const RealSubspace lprime = build_B(2, {1, 0});
  for (const auto& x : lprime.basis()) gens.push_back(ParabolicElement::translation(x));
  for (int a = 1; a <= 3; ++a) gens.push_back(ParabolicElement::center(2, Quat::unit(a)));
  Subalgebra g(space, gens);
  Prop1Params prm = Prop1Params::zero(2);
  prm.S01 = QVector::basis(2, 0);
  prm.S02 = -QVector::basis(2, 1);
  CurvatureTensor r = prop1_construct(prm, *space);
  return {std::move(g), std::move(r), std::move(prm)};
}

QVector shifted_q(const HermitianSpace& space, const QVector& X) {
  const std::size_t n = space.n();
  if (X.dim() != n) throw DimensionMismatch("shifted_q");
  QVector q = space.embed(X);
  q[0] = frac(-1, 2) * space.g(X, X);
  q[n + 1] = Quat(1);
  return q;
}

std::array<std::array<Quat, 4>, 4> change_base_q(const Prop1Params& prm, const HermitianSpace& space,
                                                 const QVector& X) {
  if (X.dim() != space.n()) throw DimensionMismatch("change_base_q");
  const auto D = prop1_D(prm);
  const auto S = prop1_S(prm);
  std::array<std::array<Quat, 4>, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      if (r == s) continue;
      out[r][s] = D[r][s] - prop1_theta(prm, space, s, Quat::unit(r) * X) +
                  prop1_theta(prm, space, r, Quat::unit(s) * X) - space.g(X, S[r][s]) + space.g(S[r][s], X);
    }
  return out;
}

std::optional<QVector> solve_base_change(const Prop1Params& prm, const HermitianSpace& space) {
  const std::size_t m = 4 * space.n();
  const auto base = change_base_q(prm, space, QVector(space.n()));
  // D' is affine in X: column t holds D'(e_t) - D'(0) restricted to (0,1), (0,2).
  RealMatrix a(8, m);
  RealVector rhs(8);
  for (int c = 0; c < 4; ++c) {
    rhs[c] = -base[0][1][c];
    rhs[4 + c] = -base[0][2][c];
  }
  for (std::size_t t = 0; t < m; ++t) {
    RealVector v(m);
    v[t] = 1;
    const auto d = change_base_q(prm, space, QVector::from_real(v));
    for (int c = 0; c < 4; ++c) {
      a(c, t) = d[0][1][c] - base[0][1][c];
      a(4 + c, t) = d[0][2][c] - base[0][2][c];
    }
  }
  const auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  return QVector::from_real(*x);
}

CurvatureTensor transform_basis(const HermitianSpace& space, const CurvatureTensor& r, const QVector& X) {
  const std::size_t n = space.n();
  const std::size_t N = space.real_dim();
  if (r.dim() != N) throw DimensionMismatch("transform_basis");
  // Columns of P are the new real basis vectors i_a v_slot in old coordinates.
  std::vector<QVector> slots;
  slots.push_back(QVector::basis(n + 2, 0));
  for (std::size_t t = 0; t < n; ++t) {
    QVector e = QVector::basis(n + 2, t + 1);
    e[0] = -space.g(QVector::basis(n, t), X);
    slots.push_back(e);
  }
  slots.push_back(shifted_q(space, X));
  RealMatrix P(N, N);
  for (std::size_t s = 0; s < n + 2; ++s)
    for (int a = 0; a < 4; ++a) {
      const RealVector col = (Quat::unit(a) * slots[s]).realify();
      for (std::size_t z = 0; z < N; ++z) P(z, 4 * s + a) = col[z];
    }
  const RealMatrix Pinv = inverse(P);
  CurvatureTensor out(N);
  for (std::size_t p = 0; p < pair_count(N); ++p) {
    const auto [i, j] = pair_at(p, N);
    out.set(i, j, Pinv * r.eval(P.column(i), P.column(j)) * P);
  }
  return out;
}

namespace {

// Dimension of {c : sum_k c_k v_k = 0} and a basis of it.
std::vector<SparseRow> column_relations(const std::vector<RealVector>& vectors) {
  const std::size_t k = vectors.size();
  RowEchelon e(k);
  if (vectors.empty()) return {};
  for (std::size_t row = 0; row < vectors[0].size(); ++row) {
    SparseRow r;
    for (std::size_t c = 0; c < k; ++c)
      if (sgn(vectors[c][row]) != 0) r.emplace_back(c, vectors[c][row]);
    if (!r.empty()) e.add_row(r);
  }
  return e.nullspace();
}

void append(RealVector& dst, const RealVector& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

NonExistenceReport n1_nonexistence(const std::string& which) {
  auto space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(1));
  std::vector<QVector> lgens;
  if (which == "ImH") {
    for (int a = 1; a <= 3; ++a) lgens.push_back(QVector::basis(1, 0, Quat::unit(a)));
  } else if (which == "C") {
    lgens = {QVector::basis(1, 0), QVector::basis(1, 0, Quat::i())};
  } else {
    throw std::invalid_argument("n1_nonexistence: L must be ImH or C");
  }
  const RealSubspace L = RealSubspace::span(1, lgens);
  std::vector<ParabolicElement> ggens;
  for (const auto& y : lgens) ggens.push_back(ParabolicElement::translation(y));
  for (int a = 1; a <= 3; ++a) ggens.push_back(ParabolicElement::center(1, Quat::unit(a)));
  const Subalgebra g(space, ggens);

  // Complement of L in H: S_rs in L  <=>  the complement coordinates of S_rs vanish.
  RowEchelon lspan(4);
  for (const auto& v : L.real_basis()) lspan.add_row(v);

  // Parameters: S01, S02 (8 reals) then d (5 reals).
  std::vector<Prop1Params> basis;
  for (int which_s = 0; which_s < 2; ++which_s)
    for (int c = 0; c < 4; ++c) {
      Prop1Params p = Prop1Params::zero(1);
      (which_s == 0 ? p.S01 : p.S02) = QVector::basis(1, 0, Quat::unit(c));
      basis.push_back(p);
    }
  const std::size_t s_params = basis.size();

  NonExistenceReport rep;
  rep.L = which;

  // 2 Im g(Y, S_0s) = theta_0(I_s Y) - theta_s(Y) for Y in L, s = 1..3, with every S_rs in L.
  std::vector<RealVector> s_eq(s_params);
  for (std::size_t k = 0; k < s_params; ++k) {
    const Prop1Params& p = basis[k];
    const auto S = prop1_S(p);
    RealVector& v = s_eq[k];
    for (int r = 0; r < 4; ++r)
      for (int s = r + 1; s < 4; ++s) {
        const SparseRow res = lspan.reduce(to_sparse(S[r][s].realify()));
        append(v, to_dense(res, 4));
      }
    for (const auto& y : lgens)
      for (int s = 1; s < 4; ++s) {
        const Quat lhs = Scalar(2) * space->g(y, S[0][s]).im();
        const Quat rhs = prop1_theta(p, *space, 0, Quat::unit(s) * y) - prop1_theta(p, *space, s, y);
        const Quat diff = lhs - rhs;
        for (int c = 0; c < 4; ++c) v.push_back(diff[c]);
      }
  }
  const auto s_eq_sol = column_relations(s_eq);
  rep.s_equation_solutions = s_eq_sol.size();

  for (int c = 0; c < 5; ++c) {
    Prop1Params p = Prop1Params::zero(1);
    p.d[c] = 1;
    basis.push_back(p);
  }
  // Full system: values in g and xi . R = 0 for every basis xi of g.
  const std::size_t N = space->real_dim();
  RowEchelon gspan(N * N);
  for (const auto& mtx : g.matrices()) gspan.add_row(mtx.flat());
  const auto mats = g.matrices();
  std::vector<RealVector> full(basis.size());
  parallel_for(basis.size(), [&](std::size_t k) {
    const CurvatureTensor r = prop1_construct(basis[k], *space);
    RealVector& v = full[k];
    for (std::size_t p = 0; p < pair_count(N); ++p) append(v, to_dense(gspan.reduce(to_sparse(r.stored(p).flat())), N * N));
    for (const auto& xi : mats) append(v, act_on_R(xi, r).flatten());
  });
  const auto full_sol = column_relations(full);
  rep.pair_solutions = full_sol.size();

  auto s_free = [&](const std::vector<SparseRow>& sols) {
    return std::all_of(sols.begin(), sols.end(), [&](const SparseRow& row) {
      return std::all_of(row.begin(), row.end(), [&](const auto& e) { return e.first >= s_params; });
    });
  };
  rep.S_zero = s_free(s_eq_sol) && s_free(full_sol);
  return rep;
}

}  // namespace holonomy
