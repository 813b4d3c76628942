#include "doctest.h"
#include "holonomy/linalg.hpp"
#include "support.hpp"

using namespace holonomy;

namespace {
RealVector vec(std::initializer_list<int> xs) {
  RealVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("row echelon rank and membership") {
  RowEchelon e(3);
  CHECK(e.add_row(vec({1, 2, 3})));
  CHECK(e.add_row(vec({2, 4, 7})));
  CHECK_FALSE(e.add_row(vec({3, 6, 10})));
  CHECK(e.rank() == 2);
  CHECK(e.contains(vec({0, 0, 5})));
  CHECK_FALSE(e.contains(vec({0, 1, 0})));
  CHECK(e.pivots() == std::vector<std::size_t>{0, 2});
  const auto ns = e.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(to_dense(ns[0], 3) == vec({-2, 1, 0}));
}

TEST_CASE("nullspace vectors annihilate random matrices") {
  testsupport::RandomExact rnd(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 2 + trial % 6;
    RealMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = trial % 2 ? rnd.scalar() : Scalar(rnd.integer(-1, 1));
    const auto ns = nullspace(m);
    std::vector<RealVector> rows;
    for (std::size_t i = 0; i < r; ++i) {
      RealVector row(c);
      for (std::size_t j = 0; j < c; ++j) row[j] = m(i, j);
      rows.push_back(row);
    }
    CHECK(ns.size() + rank(rows) == c);
    for (const auto& v : ns) {
      const RealVector z = m * v;
      for (const auto& x : z) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve finds a solution or reports inconsistency") {
  RealMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 1;
  m(1, 1) = 1; m(1, 2) = 2;
  const auto x = solve(m, vec({3, 4}));
  REQUIRE(x);
  CHECK(m * *x == vec({3, 4}));

  RealMatrix s(2, 1);
  s(0, 0) = 1; s(1, 0) = 2;
  CHECK_FALSE(solve(s, vec({1, 3})));
  CHECK(solve(s, vec({2, 4})).value() == vec({2}));
}

TEST_CASE("span intersection") {
  const std::vector<RealVector> a{vec({1, 0, 0}), vec({0, 1, 0})};
  const std::vector<RealVector> b{vec({0, 1, 1}), vec({1, 1, 1})};
  const auto i = intersect(a, b, 3);
  REQUIRE(i.size() == 1);
  CHECK(i[0] == vec({1, 0, 0}));
  CHECK(intersect(a, {}, 3).empty());
}

TEST_CASE("coordinates relative to a basis") {
  Coordinates co({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
  CHECK(co.coords(vec({2, 5, 3})).value() == vec({2, 3}));
  CHECK_FALSE(co.contains(vec({1, 0, 0})));
  CHECK_THROWS_AS(Coordinates({vec({1, 2}), vec({2, 4})}, 2), std::invalid_argument);
}

TEST_CASE("signature and inverse") {
  RealMatrix h(2, 2);
  h(0, 1) = 1; h(1, 0) = 1;
  CHECK(signature(h) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_FALSE(is_positive_definite(h));
  CHECK(inverse(h) == h);
  CHECK(is_positive_definite(RealMatrix::identity(3)));
  RealMatrix sing(2, 2);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}
