#include "doctest.h"
#include "holonomy/errors.hpp"
#include "holonomy/subspace.hpp"
#include "support.hpp"

using namespace holonomy;

namespace {
QMatrix q2(const Quat& a, const Quat& b, const Quat& c, const Quat& d) {
  QMatrix g(2, 2);
  g(0, 0) = a; g(0, 1) = b; g(1, 0) = c; g(1, 1) = d;
  return g;
}
QMatrix exemplar_gram() {
  const Quat half_k = frac(1, 2) * Quat::k();
  return q2(Quat(1), -half_k, half_k, Quat(1));
}
QVector e(std::size_t n, std::size_t t, const Quat& c = Quat(1)) { return QVector::basis(n, t, c); }
}  // namespace

TEST_CASE("make_space examples") {
  const auto s1 = HermitianSpace::standard(1);
  CHECK(s1.g(e(1, 0), e(1, 0)) == Quat(1));
  CHECK(signature(s1.eta_full_matrix()) == std::pair<std::size_t, std::size_t>{8, 4});

  const auto s2 = HermitianSpace::make(2, exemplar_gram());
  CHECK(is_positive_definite(s2.eta_matrix()));
  CHECK(signature(s2.eta_full_matrix()) == std::pair<std::size_t, std::size_t>{12, 4});

  GramConditions c;
  c.n = 2;
  c.m2 = 2;
  c.w_complex = QMatrix(2, 2);
  c.w_complex(0, 1) = Quat(1);
  c.w_complex(1, 0) = Quat(-1);
  CHECK(gram_from_conditions(c) == q2(Quat(1), Quat::j(), -Quat::j(), Quat(1)));
}

TEST_CASE("make_space rejects invalid Gram matrices") {
  CHECK_THROWS_AS(HermitianSpace::make(2, q2(Quat(1), Quat::k(), Quat::k(), Quat(1))), ValidationError);
  CHECK_THROWS_AS(HermitianSpace::make(2, q2(Quat(1), Quat(2), Quat(2), Quat(1))), ValidationError);
  CHECK_THROWS_AS(HermitianSpace::make(1, QMatrix::identity(2)), DimensionMismatch);
}

TEST_CASE("full-space metric relations") {
  const auto s = HermitianSpace::make(2, exemplar_gram());
  QVector p(4), q(4);
  p[0] = Quat(1);
  q[3] = Quat(1);
  CHECK(s.g_full(p, q) == Quat(1));
  CHECK(s.g_full(p, p).is_zero());
  CHECK(s.g_full(q, q).is_zero());
  CHECK(s.g_full(p, s.embed(e(2, 1))).is_zero());
  testsupport::RandomExact rnd(2);
  for (int trial = 0; trial < 30; ++trial) {
    const QVector x = rnd.qvector(2), y = rnd.qvector(2);
    const Quat a = rnd.quat();
    CHECK(s.g(a * x, y) == a * s.g(x, y));
    CHECK(s.g(x, a * y) == s.g(x, y) * a.conj());
    CHECK(s.g(y, x).conj() == s.g(x, y));
  }
}

TEST_CASE("recover_g_from_eta") {
  const auto s1 = HermitianSpace::standard(1);
  CHECK(s1.recover_g_from_eta(e(1, 0), e(1, 0)) == Quat(1));
  CHECK(s1.recover_g_from_eta(e(1, 0), e(1, 0, Quat::i())) == -Quat::i());
  const auto s2 = HermitianSpace::make(2, exemplar_gram());
  CHECK(s2.recover_g_from_eta(e(2, 0), e(2, 1)) == frac(-1, 2) * Quat::k());

  GramConditions c;
  c.n = 3;
  c.m1 = 2;
  c.w[1] = RealMatrix(2, 2);
  c.w[1](0, 1) = frac(1, 3);
  c.w[1](1, 0) = frac(-1, 3);
  c.omega[2] = RealMatrix(1, 1);
  const std::vector<QMatrix> grams{QMatrix::identity(2), exemplar_gram(), gram_from_conditions(c)};
  for (const auto& g : grams) {
    const auto s = HermitianSpace::make(g.rows(), g);
    for (std::size_t a = 0; a < s.n() + 2; ++a)
      for (std::size_t b = 0; b < s.n() + 2; ++b)
        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y) {
            const QVector u = QVector::basis(s.n() + 2, a, Quat::unit(x));
            const QVector v = QVector::basis(s.n() + 2, b, Quat::unit(y));
            CHECK(s.recover_g_from_eta(u, v) == s.g_full(u, v));
          }
  }
}

TEST_CASE("build_B and build_A generator counts") {
  const auto b2 = build_B(2);
  CHECK(b2.dim() == 3);
  CHECK(b2.contains(e(2, 0, Quat::i()) + e(2, 1, Quat::j())));
  CHECK(build_B(3).dim() == 5);
  const auto a3 = build_A(3);
  CHECK(a3.dim() == 4);
  CHECK(a3 == RealSubspace::span(3, {e(3, 0), e(3, 2), e(3, 0, Quat::i()) + e(3, 1, Quat::j()),
                                     e(3, 1) + e(3, 2, Quat::i())}));
  CHECK_THROWS_AS(build_B(0), ValidationError);
  CHECK_THROWS_AS(build_A(1), ValidationError);
  CHECK_THROWS_AS(build_A(4), ValidationError);
}

TEST_CASE("build_L examples and dimension formula") {
  const auto s1 = HermitianSpace::standard(1);
  CHECK(build_L(s1, 1, 0, 0, {}).dim() == 4);
  const auto im = build_L(s1, 0, 1, 0, {});
  CHECK(im == RealSubspace::span(1, {e(1, 0, Quat::i()), e(1, 0, Quat::j()), e(1, 0, Quat::k())}));
  const auto s2 = HermitianSpace::standard(2);
  CHECK(build_L(s2, 0, 0, 0, {BBlock::interval(2, 0)}) ==
        RealSubspace::span(2, {e(2, 0), e(2, 1), e(2, 0, Quat::i()) + e(2, 1, Quat::j())}));

  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = HermitianSpace::standard(n);
    for (std::size_t m = 0; m <= n; ++m)
      for (std::size_t m1 = 0; m + m1 <= n; ++m1)
        for (std::size_t m2 = 0; m + m1 + m2 <= n; ++m2) {
          const std::size_t rest = n - m - m1 - m2;
          std::vector<BBlock> lp;
          std::size_t lpdim = 0;
          if (rest >= 2) {
            lp.push_back(BBlock::interval(rest, m + m1 + m2));
            lpdim = 2 * rest - 1;
          }
          CHECK(build_L(s, m, m1, m2, lp).dim() == 4 * m + 3 * m1 + 2 * m2 + lpdim);
        }
  }
}

TEST_CASE("build_L validation") {
  const auto s3 = HermitianSpace::standard(3);
  CHECK_THROWS_AS(build_L(s3, 1, 0, 0, {BBlock::interval(2, 0)}), ValidationError);
  CHECK_THROWS_AS(build_L(s3, 0, 0, 0, {BBlock::interval(2, 0), BBlock::interval(2, 1)}), ValidationError);
  CHECK_THROWS_AS(build_L(s3, 2, 2, 0, {}), ValidationError);
  CHECK_THROWS_AS(build_L(s3, 0, 0, 0, {BBlock::interval(1, 0)}), ValidationError);
  // e1 and e2 are not orthogonal for this Gram matrix.
  QMatrix g = QMatrix::identity(2);
  g(0, 1) = frac(1, 2);
  g(1, 0) = frac(1, 2);
  CHECK_THROWS_AS(build_L(HermitianSpace::make(2, g), 1, 1, 0, {}), ValidationError);
}

TEST_CASE("rho closure") {
  CHECK(rho_closure(build_A(3)).dim() == 0);
  for (std::size_t l = 2; l <= 4; ++l) CHECK(rho_closure(build_B(l)) == build_B(l));
  CHECK(rho_closure(build_B(1)).dim() == 0);
  // Index-swapped generator order used by the n = 2 symmetric exemplar.
  const auto swapped = build_B(2, {1, 0});
  CHECK(swapped.contains(e(2, 0, Quat::j()) + e(2, 1, Quat::i())));
  CHECK(rho_closure(swapped) == swapped);
  const std::vector<RealSubspace> samples{build_A(3), build_A(5), RealSubspace::whole(2),
                                          RealSubspace::span(2, {e(2, 0), e(2, 1, Quat::k())})};
  for (const auto& l : samples) {
    const auto r = rho_closure(l);
    CHECK(r.dim() <= l.dim());
    CHECK(l.contains(r));
  }
}

TEST_CASE("decompose_L") {
  const auto s1 = HermitianSpace::standard(1);
  auto d = decompose_L(s1, RealSubspace::whole(1));
  CHECK(d.l1.dim() == 4);
  CHECK(d.l5.dim() + d.l4c.dim() + d.lrest.dim() == 0);

  const auto im = build_L(s1, 0, 1, 0, {});
  d = decompose_L(s1, im);
  CHECK(d.l1.dim() == 0);
  CHECK(d.u == RealSubspace::span(1, {e(1, 0)}));
  CHECK(d.l5 == im);
  CHECK(d.l4c.dim() + d.lrest.dim() == 0);

  const auto s2 = HermitianSpace::standard(2);
  d = decompose_L(s2, build_B(2));
  CHECK(d.l1.dim() + d.l5.dim() + d.l4c.dim() == 0);
  CHECK(d.lrest == build_B(2));

  const auto s4 = HermitianSpace::standard(4);
  const auto mixed = build_L(s4, 1, 1, 0, {BBlock::interval(2, 2)}) +
                     RealSubspace(4);
  d = decompose_L(s4, mixed);
  CHECK(d.l1.dim() == 4);
  CHECK(d.l5.dim() == 3);
  CHECK(d.lrest.dim() == 3);
  const auto s3 = HermitianSpace::standard(3);
  const auto cl = build_L(s3, 1, 0, 2, {});
  d = decompose_L(s3, cl);
  CHECK(d.l4c.dim() == 4);

  for (const auto& [space, l] : std::vector<std::pair<HermitianSpace, RealSubspace>>{
           {s4, mixed}, {s3, cl}, {s2, build_B(2)}, {s1, im}}) {
    const auto parts = decompose_L(space, l);
    const std::vector<RealSubspace> ps{parts.l1, parts.l5, parts.l4c, parts.lrest};
    std::size_t total = 0;
    RealSubspace sum(l.ambient_n());
    for (std::size_t a = 0; a < ps.size(); ++a) {
      total += ps[a].dim();
      sum = sum + ps[a];
      for (std::size_t b = a + 1; b < ps.size(); ++b) CHECK(g_orthogonal(space, ps[a], ps[b]));
    }
    CHECK(total == l.dim());
    CHECK(sum == l);
  }
}
