#include "holonomy/hermitian_space.hpp"

#include "holonomy/errors.hpp"

namespace holonomy {

RealMatrix eta_of_gram(const QMatrix& gram) {
  const std::size_t m = gram.rows();
  RealMatrix eta(4 * m, 4 * m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      if (gram(s, t).is_zero()) continue;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          eta(4 * s + a, 4 * t + b) = (Quat::unit(a) * gram(s, t) * Quat::unit(b).conj()).re();
    }
  return eta;
}

HermitianSpace HermitianSpace::make(std::size_t n, QMatrix gram) {
  if (n == 0) throw ValidationError("make_space", "n must be at least 1");
  if (gram.rows() != n || gram.cols() != n) throw DimensionMismatch("Gram matrix must be n x n");
  if (gram.conj().transpose() != gram) throw ValidationError("make_space", "G is not Hermitian");
  HermitianSpace s;
  s.n_ = n;
  s.eta_inner_ = eta_of_gram(gram);
  if (!is_positive_definite(s.eta_inner_))
    throw ValidationError("make_space", "g restricted to H^n is not positive definite");
  s.gram_ = std::move(gram);

  s.full_gram_ = QMatrix(n + 2, n + 2);
  s.full_gram_(0, n + 1) = Quat(1);
  s.full_gram_(n + 1, 0) = Quat(1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.full_gram_(1 + a, 1 + b) = s.gram_(a, b);
  s.eta_full_ = eta_of_gram(s.full_gram_);
  s.eta_full_inv_ = inverse(s.eta_full_);
  for (int alpha = 1; alpha <= 3; ++alpha)
    s.complex_[alpha - 1] = left_multiplication(Quat::unit(alpha), n + 2);
  return s;
}

HermitianSpace HermitianSpace::standard(std::size_t n) { return make(n, QMatrix::identity(n)); }

namespace {
Quat sesquilinear(const QMatrix& gram, const QVector& x, const QVector& y) {
  if (x.dim() != gram.rows() || y.dim() != gram.rows()) throw DimensionMismatch("g: vector dimension");
  Quat acc;
  for (std::size_t s = 0; s < x.dim(); ++s) {
    if (x[s].is_zero()) continue;
    for (std::size_t t = 0; t < y.dim(); ++t)
      if (!y[t].is_zero() && !gram(s, t).is_zero()) acc += x[s] * gram(s, t) * y[t].conj();
  }
  return acc;
}
}  // namespace

Quat HermitianSpace::g(const QVector& x, const QVector& y) const { return sesquilinear(gram_, x, y); }

Quat HermitianSpace::g_full(const QVector& x, const QVector& y) const {
  return sesquilinear(full_gram_, x, y);
}

Quat HermitianSpace::recover_g_from_eta(const QVector& x, const QVector& y) const {
  const RealMatrix* eta = nullptr;
  if (x.dim() == n_ && y.dim() == n_) eta = &eta_inner_;
  else if (x.dim() == n_ + 2 && y.dim() == n_ + 2) eta = &eta_full_;
  else throw DimensionMismatch("recover_g_from_eta: vector dimension");
  const RealVector xr = x.realify();
  Quat out;
  for (int alpha = 0; alpha < 4; ++alpha) {
    const RealVector iy = (Quat::unit(alpha) * y).realify();
    out[alpha] = dot(xr, (*eta) * iy);
  }
  return out;
}

QVector HermitianSpace::embed(const QVector& x) const {
  if (x.dim() != n_) throw DimensionMismatch("embed: expected an H^n vector");
  QVector out(n_ + 2);
  for (std::size_t t = 0; t < n_; ++t) out[1 + t] = x[t];
  return out;
}

namespace {
void require_skew(const RealMatrix& w, std::size_t size, const char* clause) {
  if (w.rows() == 0 && w.cols() == 0) return;
  if (w.rows() != size || w.cols() != size) throw ValidationError(clause, "form has the wrong size");
  if (w.transpose() != w * Scalar(-1)) throw ValidationError(clause, "form is not skew-symmetric");
}
Scalar entry(const RealMatrix& w, std::size_t a, std::size_t b) {
  return w.rows() == 0 ? Scalar(0) : w(a, b);
}
}  // namespace

QMatrix gram_from_conditions(const GramConditions& c) {
  const std::size_t m3 = c.m + c.m1 + c.m2;
  if (m3 > c.n) throw ValidationError("Gram conditions", "m + m1 + m2 exceeds n");
  const std::size_t rest = c.n - m3;
  for (const auto& w : c.w) require_skew(w, c.m1, "condition 2)");
  for (const auto& w : c.omega) require_skew(w, rest, "condition 4)");
  RealMatrix eta4 = c.eta4.rows() == 0 ? RealMatrix::identity(rest) : c.eta4;
  if (eta4.rows() != rest || eta4.cols() != rest)
    throw ValidationError("condition 4)", "eta has the wrong size");
  if (eta4.transpose() != eta4 || (rest > 0 && !is_positive_definite(eta4)))
    throw ValidationError("condition 4)", "eta is not symmetric positive definite");

  QMatrix g(c.n, c.n);
  for (std::size_t a = 0; a < c.m; ++a) g(a, a) = Quat(1);
  for (std::size_t a = 0; a < c.m1; ++a)
    for (std::size_t b = 0; b < c.m1; ++b)
      g(c.m + a, c.m + b) = Quat(a == b ? 1 : 0, entry(c.w[0], a, b), entry(c.w[1], a, b), entry(c.w[2], a, b));

  const std::size_t o3 = c.m + c.m1;
  if (c.w_complex.rows() != 0) {
    if (c.w_complex.rows() != c.m2 || c.w_complex.cols() != c.m2)
      throw ValidationError("condition 3)", "w has the wrong size");
    if (c.w_complex.transpose() != -c.w_complex) throw ValidationError("condition 3)", "w is not skew-symmetric");
  }
  for (std::size_t a = 0; a < c.m2; ++a)
    for (std::size_t b = 0; b < c.m2; ++b) {
      Quat wj;
      if (c.w_complex.rows() != 0) {
        const Quat& w = c.w_complex(a, b);
        if (!is_zero(w[2]) || !is_zero(w[3])) throw ValidationError("condition 3)", "w must be complex valued");
        wj = w * Quat::j();
      }
      g(o3 + a, o3 + b) = Quat(a == b ? 1 : 0) + wj;
    }

  for (std::size_t a = 0; a < rest; ++a)
    for (std::size_t b = 0; b < rest; ++b)
      g(m3 + a, m3 + b) = Quat(eta4(a, b), entry(c.omega[0], a, b), entry(c.omega[1], a, b), entry(c.omega[2], a, b));
  return g;
}

}  // namespace holonomy
