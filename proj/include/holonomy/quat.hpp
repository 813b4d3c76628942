#pragma once

#include <array>
#include <iosfwd>

#include "holonomy/scalar.hpp"

namespace holonomy {

/// Quaternion c0 + c1 i + c2 j + c3 k with exact rational coefficients.
class Quat {
 public:
  Quat() = default;
  Quat(const Scalar& re) : c_{re, 0, 0, 0} {}  // NOLINT: implicit real embedding
  Quat(int re) : c_{Scalar(re), 0, 0, 0} {}    // NOLINT
  Quat(Scalar c0, Scalar c1, Scalar c2, Scalar c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// 1, i, j, k for alpha = 0..3.
  static Quat unit(int alpha);
  static Quat i() { return unit(1); }
  static Quat j() { return unit(2); }
  static Quat k() { return unit(3); }

  const Scalar& operator[](int alpha) const { return c_[alpha]; }
  Scalar& operator[](int alpha) { return c_[alpha]; }

  Quat conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  const Scalar& re() const { return c_[0]; }
  Quat im() const { return {0, c_[1], c_[2], c_[3]}; }
  Scalar norm2() const;
  bool is_zero() const;
  bool is_imaginary() const { return holonomy::is_zero(c_[0]); }

  Quat& operator+=(const Quat& o);
  Quat& operator-=(const Quat& o);
  Quat& operator*=(const Scalar& s);

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator-(const Quat& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }
  friend Quat operator*(const Quat& a, const Quat& b);  // Hamilton product
  friend Quat operator*(Quat a, const Scalar& s) { return a *= s; }
  friend Quat operator*(const Scalar& s, Quat a) { return a *= s; }
  friend bool operator==(const Quat& a, const Quat& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quat& q);

 private:
  std::array<Scalar, 4> c_{};
};

/// xy - yx
Quat commutator(const Quat& x, const Quat& y);

}  // namespace holonomy
