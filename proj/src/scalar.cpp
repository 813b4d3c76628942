#include "holonomy/scalar.hpp"

#include <stdexcept>

namespace holonomy {

std::string to_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Scalar out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (sgn(out.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

}  // namespace holonomy
