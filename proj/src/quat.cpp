#include "holonomy/quat.hpp"

#include <ostream>
#include <stdexcept>

namespace holonomy {

Quat Quat::unit(int alpha) {
  if (alpha < 0 || alpha > 3) throw std::out_of_range("quaternion unit index");
  Quat q;
  q.c_[alpha] = 1;
  return q;
}

Scalar Quat::norm2() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

bool Quat::is_zero() const {
  for (const auto& c : c_)
    if (!holonomy::is_zero(c)) return false;
  return true;
}

Quat& Quat::operator+=(const Quat& o) {
  for (int a = 0; a < 4; ++a) c_[a] += o.c_[a];
  return *this;
}

Quat& Quat::operator-=(const Quat& o) {
  for (int a = 0; a < 4; ++a) c_[a] -= o.c_[a];
  return *this;
}

Quat& Quat::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Quat operator*(const Quat& x, const Quat& y) {
  const auto& a = x.c_;
  const auto& b = y.c_;
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat commutator(const Quat& x, const Quat& y) { return x * y - y * x; }

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  os << "(" << q.c_[0] << ", " << q.c_[1] << ", " << q.c_[2] << ", " << q.c_[3] << ")";
  return os;
}

}  // namespace holonomy
