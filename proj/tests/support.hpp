#pragma once

#include <random>

#include "holonomy/qmatrix.hpp"

namespace testsupport {

using namespace holonomy;

/// Small random rationals p/q with |p| <= 5, 1 <= q <= 4.
class RandomExact {
 public:
  explicit RandomExact(unsigned seed) : rng_(seed) {}

  Scalar scalar() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return frac(num(rng_), den(rng_));
  }
  Quat quat() { return {scalar(), scalar(), scalar(), scalar()}; }
  QVector qvector(std::size_t m) {
    QVector v(m);
    for (std::size_t t = 0; t < m; ++t) v[t] = quat();
    return v;
  }
  QMatrix qmatrix(std::size_t r, std::size_t c) {
    QMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = quat();
    return a;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace testsupport
