#include <sstream>

#include "doctest.h"
#include "holonomy/errors.hpp"
#include "holonomy/linalg.hpp"
#include "holonomy/qmatrix.hpp"
#include "support.hpp"

using namespace holonomy;

namespace {
RealMatrix rows4(std::initializer_list<std::initializer_list<int>> rows) {
  RealMatrix m(4, 4);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}
}  // namespace

TEST_CASE("scalar text form") {
  CHECK(to_string(Scalar(3)) == "3/1");
  CHECK(to_string(frac(-2, 4)) == "-1/2");
  CHECK(parse_scalar("6/-4") == Scalar(-3, 2));
  CHECK(parse_scalar(" 7 ") == 7);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
}

TEST_CASE("quaternion relations") {
  const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == Quat(-1));
  CHECK(Quat(1, 2, 0, 0).conj() == Quat(1, -2, 0, 0));
  CHECK(Quat(3, 1, -1, 0).im() == Quat(0, 1, -1, 0));
  CHECK(commutator(i, j) == Quat(0, 0, 0, 2));
  std::ostringstream os;
  os << Quat(frac(1, 2), 0, -1, 0);
  CHECK(os.str() == "(1/2, 0, -1, 0)");
}

TEST_CASE("quaternion algebra properties on random exact inputs") {
  testsupport::RandomExact rnd(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Quat x = rnd.quat(), y = rnd.quat(), z = rnd.quat();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK(x.conj().conj() == x);
    CHECK(x * x.conj() == Quat(x.norm2()));
    CHECK((x * y).norm2() == x.norm2() * y.norm2());
    CHECK(Quat(x.re()) + x.im() == x);
  }
}

TEST_CASE("op_apply follows the left-coordinate convention") {
  const QVector x = QVector::basis(2, 0, Quat(1, 2, 3, 4)) + QVector::basis(2, 1, Quat::k());
  CHECK(op_apply(QMatrix::identity(2), x) == x);

  QMatrix a(1, 1);
  a(0, 0) = Quat::j();
  CHECK(op_apply(a, QVector::basis(1, 0, Quat::i()))[0] == Quat::k());

  QMatrix bad(1, 2);
  CHECK_THROWS_AS(op_apply(bad, QVector(1)), DimensionMismatch);
}

TEST_CASE("composition of Op maps") {
  // f = Op((j)), g = Op((i)); Mat_fg = (ij) = (k) and f(g(e1)) = k e1.
  QMatrix f(1, 1), g(1, 1);
  f(0, 0) = Quat::j();
  g(0, 0) = Quat::i();
  const QMatrix fg = compose(f, g);
  CHECK(fg(0, 0) == Quat::k());
  const QVector e1 = QVector::basis(1, 0);
  CHECK(op_apply(f, op_apply(g, e1)) == QVector::basis(1, 0, Quat::k()));

  testsupport::RandomExact rnd(5);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix a = rnd.qmatrix(3, 3), b = rnd.qmatrix(3, 3);
    const QVector x = rnd.qvector(3);
    CHECK(op_apply(compose(a, b), x) == op_apply(a, op_apply(b, x)));
  }
}

TEST_CASE("Op(A) is H-linear") {
  testsupport::RandomExact rnd(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const QMatrix a = rnd.qmatrix(m, m);
    const QVector x = rnd.qvector(m);
    const Quat c = rnd.quat();
    CHECK(op_apply(a, c * x) == c * op_apply(a, x));
  }
}

TEST_CASE("realify of basis quaternions") {
  CHECK(realify(Quat(1)) == RealMatrix::identity(4));
  CHECK(realify(Quat::i()) == rows4({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  CHECK(realify(Quat::k()) == rows4({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
  // General entry pattern of the displayed matrix.
  const Quat c(1, 2, 3, 4);
  CHECK(realify(c) == rows4({{1, -2, -3, -4}, {2, 1, 4, -3}, {3, -4, 1, 2}, {4, 3, -2, 1}}));
}

TEST_CASE("realify acts like op_apply on coordinates") {
  testsupport::RandomExact rnd(13);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix a = rnd.qmatrix(2, 3);
    const QVector x = rnd.qvector(3);
    CHECK(realify(a) * x.realify() == op_apply(a, x).realify());
    CHECK(QMatrix::from_real(realify(a)) == a);
  }
  CHECK_THROWS_AS(QMatrix::from_real(left_multiplication(Quat::i(), 1)), std::invalid_argument);
}

TEST_CASE("realify is an injective homomorphism under composition (basis pairs, m <= 3)") {
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<QMatrix> basis;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        for (int alpha = 0; alpha < 4; ++alpha) {
          QMatrix e(m, m);
          e(r, c) = Quat::unit(alpha);
          basis.push_back(e);
        }
    std::vector<RealVector> images;
    for (const auto& a : basis) {
      images.push_back(realify(a).flat());
      for (const auto& b : basis) CHECK(realify(compose(a, b)) == realify(a) * realify(b));
    }
    CHECK(rank(images) == basis.size());
  }
}

TEST_CASE("left multiplications are complex structures commuting with Op") {
  const RealMatrix i1 = left_multiplication(Quat::i(), 2);
  const RealMatrix i2 = left_multiplication(Quat::j(), 2);
  const RealMatrix i3 = left_multiplication(Quat::k(), 2);
  CHECK(i1 * i1 == RealMatrix::identity(8) * Scalar(-1));
  CHECK(i1 * i2 == i3);
  CHECK(i2 * i1 == i3 * Scalar(-1));
  testsupport::RandomExact rnd(17);
  const RealMatrix a = realify(rnd.qmatrix(2, 2));
  CHECK(commutator(a, i1).is_zero());
  CHECK(commutator(a, i2).is_zero());
  CHECK(commutator(a, i3).is_zero());
}
