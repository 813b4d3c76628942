#include <doctest.h>

#include "holonomy/errors.hpp"
#include "holonomy/symmetric_pair.hpp"
#include "support.hpp"

using namespace holonomy;

namespace {

Prop1Params one_param(std::size_t n, const std::string& which) {
  Prop1Params p = Prop1Params::zero(n);
  if (which == "C") p.C01 = Quat::j();
  if (which == "S") p.S01 = QVector::basis(n, 0, Quat::k());
  if (which == "d") p.d[2] = 1;
  if (which == "A") p.A0[1] = sp_basis(n)[0];
  return p;
}

}  // namespace

TEST_CASE("act_on_R: zero element and grading eigenvalues") {
  const auto space = HermitianSpace::standard(1);
  testsupport::RandomExact rnd(8);
  Prop1Params p = Prop1Params::zero(1);
  p.C01 = rnd.quat();
  p.S02 = rnd.qvector(1);
  const auto r = prop1_construct(p, space);
  CHECK(act_on_R(space, ParabolicElement::zero(1), r).is_zero());

  const auto one = ParabolicElement::grading(1);
  // C and A0 tensors have grade 2, S tensors grade 3, D tensors grade 4.
  const std::vector<std::pair<std::string, int>> cases = {{"C", 2}, {"A", 2}, {"S", 3}, {"d", 4}};
  for (const auto& [which, grade] : cases) {
    CAPTURE(which);
    const auto t = prop1_construct(one_param(1, which), space);
    REQUIRE_FALSE(t.is_zero());
    CHECK(act_on_R(space, one, t) == Scalar(grade) * t);
  }
}

TEST_CASE("act_on_R is bilinear and preserves Bianchi") {
  const auto space = HermitianSpace::standard(1);
  testsupport::RandomExact rnd(21);
  const auto basis = parabolic_basis(space);
  Prop1Params p1 = Prop1Params::zero(1), p2 = Prop1Params::zero(1);
  p1.C02 = rnd.quat();
  p1.S01 = rnd.qvector(1);
  p2.d[0] = rnd.scalar();
  p2.A0[2] = sp_basis(1)[1];
  const auto r1 = prop1_construct(p1, space), r2 = prop1_construct(p2, space);
  const auto x1 = basis[rnd.integer(0, 13)], x2 = basis[rnd.integer(0, 13)];
  const Scalar a = rnd.scalar(), b = rnd.scalar();
  CHECK(act_on_R(space, a * x1 + b * x2, r1) == a * act_on_R(space, x1, r1) + b * act_on_R(space, x2, r1));
  CHECK(act_on_R(space, x1, a * r1 + b * r2) == a * act_on_R(space, x1, r1) + b * act_on_R(space, x1, r2));
  for (const auto& xi : basis) CHECK(satisfies_bianchi(act_on_R(space, xi, r1 + r2)));
}

TEST_CASE("act_on_R dimension check") {
  CHECK_THROWS_AS(act_on_R(RealMatrix(3, 3), CurvatureTensor(4)), DimensionMismatch);
}

TEST_CASE("flat case: trivial algebra and zero tensor") {
  auto space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(1));
  Subalgebra g(space, {});
  const auto rep = is_symmetric_pair(g, CurvatureTensor(space->real_dim()));
  CHECK(rep.symmetric());
  CHECK(rep.certificate.empty());
}

TEST_CASE("exemplar: structure") {
  const auto ex = exemplar_n2();
  CHECK(ex.g.dim() == 6);
  CHECK(ex.g.is_closed());
  const auto S = prop1_S(ex.params);
  const QVector expected = Quat::j() * QVector::basis(2, 0) + Quat::i() * QVector::basis(2, 1);
  CHECK(S[0][3] == expected);
  CHECK(ex.g.contains(ParabolicElement::translation(S[0][3])));
}

TEST_CASE("exemplar: identities, symmetric pair, span") {
  const auto ex = exemplar_n2();
  const auto& space = ex.g.space();
  const auto ids = check_curvature_identities(space, ex.R);
  CHECK(ids.bianchi);
  CHECK(ids.eq_star);
  CHECK(ids.ri);
  CHECK(ids.all());
  CHECK(check_LP(space, ex.R).all());
  const auto rep = is_symmetric_pair(ex.g, ex.R);
  CHECK(rep.spans);
  CHECK(rep.span_dim == 6);
  CHECK(rep.annihilated);
  CHECK(rep.certificate.empty());
  CHECK(rep.symmetric());
  for (const auto& xi : ex.g.basis()) CHECK(act_on_R(space, xi, ex.R).is_zero());
}

TEST_CASE("exemplar algebra is family g6 with m = 0") {
  const auto ex = exemplar_n2();
  FamilySpec spec;
  spec.family = 6;
  spec.lprime = {BBlock{{1, 0}}};
  const auto g6 = family_g(spec, ex.g.space_ptr());
  CHECK(g6.dim() == ex.g.dim());
  for (const auto& u : ex.g.basis()) CHECK(g6.contains(u));
}

TEST_CASE("the other generator order of L' does not give a symmetric pair") {
  const auto ex = exemplar_n2();
  std::vector<ParabolicElement> gens;
  const RealSubspace lp = build_B(2, {0, 1});
  for (const auto& x : lp.basis()) gens.push_back(ParabolicElement::translation(x));
  for (int a = 1; a <= 3; ++a) gens.push_back(ParabolicElement::center(2, Quat::unit(a)));
  Subalgebra swapped(ex.g.space_ptr(), gens);
  CHECK_THROWS_AS(is_symmetric_pair(swapped, ex.R), ValidationError);
}

TEST_CASE("g1 with a generic tensor is not a symmetric pair") {
  const auto [spec, space] = minimal_family(1);
  const auto g = family_g(spec, space);
  const auto rs = solve_R(g);
  testsupport::RandomExact rnd(11);
  CurvatureTensor r(space->real_dim());
  for (std::size_t t = 0; t < rs.dim(); ++t) r += rnd.scalar() * rs.tensor(t);
  bool c_nonzero = false;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      c_nonzero = c_nonzero || !from_matrix(*space, r(space->q_index(a), space->q_index(b))).a.is_zero();
  REQUIRE(c_nonzero);
  const auto rep = is_symmetric_pair(g, r);
  CHECK_FALSE(rep.symmetric());
  CHECK_FALSE(rep.certificate.empty());
  CHECK(std::find(rep.obstructions.begin(), rep.obstructions.end(), "C") != rep.obstructions.end());
  for (const auto& v : rep.certificate) {
    CHECK(v.x < v.y);
    CHECK_FALSE(act_on_R(*space, g.basis()[v.xi], r)(v.x, v.y).is_zero());
  }
}

TEST_CASE("is_symmetric_pair rejects tensors outside R(g)") {
  const auto ex = exemplar_n2();
  Prop1Params p = Prop1Params::zero(2);
  p.C01 = Quat(1);
  CHECK_THROWS_AS(is_symmetric_pair(ex.g, prop1_construct(p, ex.g.space())), ValidationError);
}

TEST_CASE("shifted q is null and pairs with p") {
  const auto ex = exemplar_n2();
  const auto& space = ex.g.space();
  testsupport::RandomExact rnd(4);
  const QVector X = rnd.qvector(2);
  const QVector q = shifted_q(space, X);
  const QVector p = QVector::basis(4, 0);
  CHECK(space.g_full(q, q) == Quat());
  CHECK(space.g_full(p, q) == Quat(1));
}

TEST_CASE("change_base_q: X = 0 leaves D unchanged") {
  testsupport::RandomExact rnd(6);
  const auto space = HermitianSpace::standard(2);
  Prop1Params p = Prop1Params::zero(2);
  for (auto& x : p.d) x = rnd.scalar();
  p.S01 = rnd.qvector(2);
  const auto D = prop1_D(p);
  const auto Dp = change_base_q(p, space, QVector(2));
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) CHECK(Dp[r][s] == D[r][s]);
}

TEST_CASE("change_base_q agrees with the explicit basis change") {
  testsupport::RandomExact rnd(13);
  const auto ex = exemplar_n2();
  const auto& space = ex.g.space();
  Prop1Params p = ex.params;
  for (auto& x : p.d) x = rnd.scalar();
  p.S01 = rnd.qvector(2);
  p.S02 = rnd.qvector(2);
  const auto r = prop1_construct(p, space);
  const QVector X = rnd.qvector(2);
  const auto Dp = change_base_q(p, space, X);
  const auto rn = transform_basis(space, r, X);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(from_matrix(space, rn(space.q_index(a), space.q_index(b))).b == Dp[a][b]);
    }
}

TEST_CASE("exemplar with D: a base change kills every D'") {
  testsupport::RandomExact rnd(2);
  const auto ex = exemplar_n2();
  const auto& space = ex.g.space();
  Prop1Params p = ex.params;
  for (auto& x : p.d) x = rnd.scalar();
  const auto X = solve_base_change(p, space);
  REQUIRE(X.has_value());
  const auto Dp = change_base_q(p, space, *X);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) CHECK(Dp[r][s] == Quat());
  // In the new basis the tensor is the plain exemplar tensor.
  CHECK(transform_basis(space, prop1_construct(p, space), *X) == ex.R);
}

TEST_CASE("n = 1 admits no non-zero S") {
  for (const std::string which : {"ImH", "C"}) {
    CAPTURE(which);
    const auto rep = n1_nonexistence(which);
    CHECK(rep.s_equation_solutions == 0);
    CHECK(rep.S_zero);
  }
  CHECK_THROWS(n1_nonexistence("H"));
}
