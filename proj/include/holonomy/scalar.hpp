#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holonomy {

/// Exact rational number. GMP keeps the value canonical (gcd 1, positive
/// denominator) after every operation.
using Scalar = mpq_class;

/// "p/q" form, always with an explicit denominator ("3/1", "-1/2").
std::string to_string(const Scalar& x);

/// Accepts "p/q" or a plain integer. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Scalar frac(long p, long q) {
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace holonomy
