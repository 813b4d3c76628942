#include "holonomy/subspace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

RealSubspace RealSubspace::span(std::size_t ambient_n, const std::vector<QVector>& vectors) {
  RealSubspace s(ambient_n);
  RowEchelon e(4 * ambient_n);
  for (const auto& v : vectors) {
    if (v.dim() != ambient_n) throw DimensionMismatch("RealSubspace: vector dimension");
    if (e.add_row(v.realify())) s.basis_.push_back(v);
  }
  return s;
}

RealSubspace RealSubspace::from_real(std::size_t ambient_n, const std::vector<RealVector>& vectors) {
  std::vector<QVector> q;
  for (const auto& v : vectors) q.push_back(QVector::from_real(v));
  return span(ambient_n, q);
}

RealSubspace RealSubspace::whole(std::size_t ambient_n) {
  std::vector<QVector> v;
  for (std::size_t t = 0; t < ambient_n; ++t)
    for (int a = 0; a < 4; ++a) v.push_back(QVector::basis(ambient_n, t, Quat::unit(a)));
  return span(ambient_n, v);
}

std::vector<RealVector> RealSubspace::real_basis() const {
  std::vector<RealVector> out;
  for (const auto& v : basis_) out.push_back(v.realify());
  return out;
}

bool RealSubspace::contains(const QVector& x) const {
  if (x.dim() != n_) throw DimensionMismatch("RealSubspace::contains");
  RowEchelon e(4 * n_);
  for (const auto& v : basis_) e.add_row(v.realify());
  return e.contains(x.realify());
}

bool RealSubspace::contains(const RealSubspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("RealSubspace::contains");
  RowEchelon e(4 * n_);
  for (const auto& v : basis_) e.add_row(v.realify());
  for (const auto& v : other.basis_)
    if (!e.contains(v.realify())) return false;
  return true;
}

bool operator==(const RealSubspace& a, const RealSubspace& b) {
  return a.dim() == b.dim() && a.contains(b);
}

RealSubspace RealSubspace::left_multiply(const Quat& c) const {
  std::vector<QVector> v;
  for (const auto& x : basis_) v.push_back(c * x);
  return span(n_, v);
}

RealSubspace RealSubspace::operator+(const RealSubspace& o) const {
  if (o.n_ != n_) throw DimensionMismatch("RealSubspace sum");
  std::vector<QVector> v = basis_;
  v.insert(v.end(), o.basis_.begin(), o.basis_.end());
  return span(n_, v);
}

RealSubspace RealSubspace::intersect(const RealSubspace& o) const {
  if (o.n_ != n_) throw DimensionMismatch("RealSubspace intersection");
  return from_real(n_, holonomy::intersect(real_basis(), o.real_basis(), 4 * n_));
}

RealSubspace RealSubspace::quaternionic_span() const {
  std::vector<QVector> v;
  for (int a = 0; a < 4; ++a)
    for (const auto& x : basis_) v.push_back(Quat::unit(a) * x);
  return span(n_, v);
}

RealSubspace g_orthogonal_in(const HermitianSpace& space, const RealSubspace& v,
                             const RealSubspace& w_space) {
  // Unknown coefficients c of X = sum c_i v_i; conditions eta(X, i_a w) = 0.
  std::vector<RealVector> conds;
  for (const auto& w : w_space.basis())
    for (int a = 0; a < 4; ++a) {
      const QVector iw = Quat::unit(a) * w;
      RealVector row;
      for (const auto& x : v.basis()) row.push_back(space.eta(x, iw));
      conds.push_back(std::move(row));
    }
  if (conds.empty() || v.dim() == 0) return v;
  RealMatrix m(conds.size(), v.dim());
  for (std::size_t r = 0; r < conds.size(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = conds[r][c];
  std::vector<QVector> out;
  for (const auto& c : nullspace(m)) {
    QVector x(v.ambient_n());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i])) x += c[i] * v.basis()[i];
    out.push_back(std::move(x));
  }
  return RealSubspace::span(v.ambient_n(), out);
}

bool g_orthogonal(const HermitianSpace& space, const RealSubspace& a, const RealSubspace& b) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (!space.g(x, y).is_zero()) return false;
  return true;
}

namespace {
void check_indices(std::size_t n, const std::vector<std::size_t>& idx, const char* what) {
  std::set<std::size_t> seen;
  for (auto t : idx) {
    if (t >= n) throw ValidationError(what, "index " + std::to_string(t) + " outside H^" + std::to_string(n));
    if (!seen.insert(t).second) throw ValidationError(what, "repeated index " + std::to_string(t));
  }
}
QVector e(std::size_t n, std::size_t t, const Quat& c = Quat(1)) { return QVector::basis(n, t, c); }
}  // namespace

RealSubspace build_B(std::size_t n, const std::vector<std::size_t>& f) {
  if (f.empty()) throw ValidationError("B(l)", "l must be at least 1");
  check_indices(n, f, "B(l)");
  std::vector<QVector> v;
  for (auto t : f) v.push_back(e(n, t));
  for (std::size_t r = 0; r + 1 < f.size(); ++r) v.push_back(e(n, f[r], Quat::i()) + e(n, f[r + 1], Quat::j()));
  return RealSubspace::span(n, v);
}

RealSubspace build_B(std::size_t l) {
  std::vector<std::size_t> f(l);
  for (std::size_t r = 0; r < l; ++r) f[r] = r;
  return build_B(l, f);
}

RealSubspace build_A(std::size_t n, const std::vector<std::size_t>& f) {
  if (f.size() < 3 || f.size() % 2 == 0) throw ValidationError("A(2l-1)", "needs 2l-1 vectors with l >= 2");
  check_indices(n, f, "A(2l-1)");
  const std::size_t l = (f.size() + 1) / 2;
  // f_r below is 1-based as in the generator list.
  auto fr = [&](std::size_t r, const Quat& c = Quat(1)) { return e(n, f[r - 1], c); };
  std::vector<QVector> v;
  for (std::size_t r = 1; r <= 2 * l - 1; ++r)
    if (r != l) v.push_back(fr(r));
  for (std::size_t r = 1; r + 1 <= l; ++r) v.push_back(fr(r, Quat::i()) + fr(r + 1, Quat::j()));
  v.push_back(fr(l) + fr(l + 1, Quat::i()));
  for (std::size_t r = l + 1; r + 1 <= 2 * l - 1; ++r) v.push_back(fr(r, Quat::j()) + fr(r + 1, Quat::i()));
  return RealSubspace::span(n, v);
}

RealSubspace build_A(std::size_t two_l_minus_1) {
  std::vector<std::size_t> f(two_l_minus_1);
  for (std::size_t r = 0; r < f.size(); ++r) f[r] = r;
  return build_A(two_l_minus_1, f);
}

BBlock BBlock::interval(std::size_t l, std::size_t offset) {
  BBlock b;
  for (std::size_t r = 0; r < l; ++r) b.indices.push_back(offset + r);
  return b;
}

RealSubspace build_L(const HermitianSpace& space, std::size_t m, std::size_t m1, std::size_t m2,
                     const std::vector<BBlock>& lprime) {
  const std::size_t n = space.n();
  const std::size_t m3 = m + m1 + m2;
  if (m3 > n) throw ValidationError("L(m,m1,m2,L')", "m + m1 + m2 exceeds n");
  std::set<std::size_t> used;
  std::vector<RealSubspace> parts;

  std::vector<QVector> hm, imh, cm;
  for (std::size_t t = 0; t < m; ++t)
    for (int a = 0; a < 4; ++a) hm.push_back(e(n, t, Quat::unit(a)));
  for (std::size_t t = m; t < m + m1; ++t)
    for (int a = 1; a < 4; ++a) imh.push_back(e(n, t, Quat::unit(a)));
  for (std::size_t t = m + m1; t < m3; ++t) {
    cm.push_back(e(n, t));
    cm.push_back(e(n, t, Quat::i()));
  }
  parts.push_back(RealSubspace::span(n, hm));
  parts.push_back(RealSubspace::span(n, imh));
  parts.push_back(RealSubspace::span(n, cm));

  for (const auto& blk : lprime) {
    if (blk.indices.size() < 2) throw ValidationError("L(m,m1,m2,L')", "B(l) blocks of L' need l >= 2");
    for (auto t : blk.indices) {
      if (t < m3 || t >= n)
        throw ValidationError("L(m,m1,m2,L')", "L' index " + std::to_string(t) + " outside [m+m1+m2, n)");
      if (!used.insert(t).second)
        throw ValidationError("L(m,m1,m2,L')", "L' blocks overlap at index " + std::to_string(t));
    }
    parts.push_back(build_B(n, blk.indices));
  }
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (!g_orthogonal(space, parts[a], parts[b]))
        throw ValidationError("L(m,m1,m2,L')", "summands are not g-orthogonal");
  RealSubspace out(n);
  for (const auto& p : parts) out = out + p;
  return out;
}

RealSubspace rho_closure(const RealSubspace& lp) {
  const std::size_t n = lp.ambient_n();
  const std::size_t d = lp.dim();
  if (d == 0) return RealSubspace(n);
  // Unknowns (x, y, z) with X = sum x v, Y = sum y v and jX - iY = sum z v.
  std::vector<RealVector> jv, iv, v;
  for (const auto& b : lp.basis()) {
    jv.push_back((Quat::j() * b).realify());
    iv.push_back((Quat::i() * b).realify());
    v.push_back(b.realify());
  }
  RealMatrix m(4 * n, 3 * d);
  for (std::size_t r = 0; r < 4 * n; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = jv[c][r];
      m(r, d + c) = -iv[c][r];
      m(r, 2 * d + c) = -v[c][r];
    }
  std::vector<QVector> gens;
  for (const auto& sol : nullspace(m)) {
    QVector x(n), y(n), z(n);
    for (std::size_t c = 0; c < d; ++c) {
      x += sol[c] * lp.basis()[c];
      y += sol[d + c] * lp.basis()[c];
      z += sol[2 * d + c] * lp.basis()[c];
    }
    gens.push_back(x);
    gens.push_back(y);
    gens.push_back(z);
  }
  return RealSubspace::span(n, gens);
}

LDecomposition decompose_L(const HermitianSpace& space, const RealSubspace& l) {
  const std::size_t n = l.ambient_n();
  if (n != space.n()) throw DimensionMismatch("decompose_L: ambient dimension");
  const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
  LDecomposition d{RealSubspace(n), RealSubspace(n), RealSubspace(n), RealSubspace(n), RealSubspace(n)};

  d.l1 = l.intersect(l.left_multiply(i)).intersect(l.left_multiply(j)).intersect(l.left_multiply(k));
  const RealSubspace l2 = g_orthogonal_in(space, l, d.l1);
  d.u = l2.left_multiply(i).intersect(l2.left_multiply(j)).intersect(l2.left_multiply(k));
  d.l5 = d.u.left_multiply(i) + d.u.left_multiply(j) + d.u.left_multiply(k);
  const RealSubspace l4 = g_orthogonal_in(space, l2, d.l5);
  d.l4c = l4.left_multiply(i).intersect(l4);
  d.lrest = g_orthogonal_in(space, l4, d.l4c);
  return d;
}

}  // namespace holonomy
