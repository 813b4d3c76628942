#include "holonomy/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "holonomy/errors.hpp"

namespace holonomy {

ParabolicElement ParabolicElement::scalar_part(std::size_t n, const Quat& a) {
  ParabolicElement u = zero(n);
  u.a = a;
  return u;
}

ParabolicElement ParabolicElement::matrix_part(const QMatrix& A) {
  ParabolicElement u = zero(A.rows());
  u.A = A;
  return u;
}

ParabolicElement ParabolicElement::translation(const QVector& X) {
  ParabolicElement u = zero(X.dim());
  u.X = X;
  return u;
}

ParabolicElement ParabolicElement::center(std::size_t n, const Quat& b) {
  ParabolicElement u = zero(n);
  u.b = b;
  return u;
}

RealVector ParabolicElement::coordinates() const {
  const std::size_t n = this->n();
  RealVector v;
  v.reserve(8 + 4 * n + 4 * n * n);
  for (int c = 0; c < 4; ++c) v.push_back(a[c]);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (int c = 0; c < 4; ++c) v.push_back(A(s, t)[c]);
  for (std::size_t t = 0; t < n; ++t)
    for (int c = 0; c < 4; ++c) v.push_back(X[t][c]);
  for (int c = 0; c < 4; ++c) v.push_back(b[c]);
  return v;
}

ParabolicElement ParabolicElement::from_coordinates(std::size_t n, const RealVector& v) {
  if (v.size() != 8 + 4 * n + 4 * n * n) throw DimensionMismatch("ParabolicElement coordinates");
  ParabolicElement u = zero(n);
  std::size_t i = 0;
  for (int c = 0; c < 4; ++c) u.a[c] = v[i++];
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (int c = 0; c < 4; ++c) u.A(s, t)[c] = v[i++];
  for (std::size_t t = 0; t < n; ++t)
    for (int c = 0; c < 4; ++c) u.X[t][c] = v[i++];
  for (int c = 0; c < 4; ++c) u.b[c] = v[i++];
  return u;
}

ParabolicElement& ParabolicElement::operator+=(const ParabolicElement& o) {
  a += o.a;
  A += o.A;
  X += o.X;
  b += o.b;
  return *this;
}

ParabolicElement& ParabolicElement::operator-=(const ParabolicElement& o) {
  a -= o.a;
  A -= o.A;
  X -= o.X;
  b -= o.b;
  return *this;
}

ParabolicElement operator*(const Scalar& s, const ParabolicElement& u) {
  return {s * u.a, s * u.A, s * u.X, s * u.b};
}

QMatrix to_qmatrix(const HermitianSpace& space, const ParabolicElement& u) {
  const std::size_t n = space.n();
  if (u.n() != n || u.A.rows() != n) throw DimensionMismatch("element does not match the space");
  QMatrix m(n + 2, n + 2);
  m(0, 0) = u.a;
  m(0, n + 1) = u.b;
  m(n + 1, n + 1) = -u.a.conj();
  for (std::size_t t = 0; t < n; ++t) {
    Quat acc;
    for (std::size_t s = 0; s < n; ++s) acc += space.gram()(t, s) * u.X[s].conj();
    m(0, 1 + t) = -acc;
    m(1 + t, n + 1) = u.X[t];
    for (std::size_t s = 0; s < n; ++s) m(1 + t, 1 + s) = u.A(t, s);
  }
  return m;
}

RealMatrix to_matrix(const HermitianSpace& space, const ParabolicElement& u) {
  return realify(to_qmatrix(space, u));
}

ParabolicElement from_matrix(const HermitianSpace& space, const RealMatrix& m) {
  const std::size_t n = space.n();
  if (m.rows() != space.real_dim() || m.cols() != space.real_dim())
    throw DimensionMismatch("from_matrix: matrix size");
  const QMatrix q = QMatrix::from_real(m);
  ParabolicElement u = ParabolicElement::zero(n);
  u.a = q(0, 0);
  u.b = q(0, n + 1);
  for (std::size_t t = 0; t < n; ++t) {
    u.X[t] = q(1 + t, n + 1);
    for (std::size_t s = 0; s < n; ++s) u.A(t, s) = q(1 + t, 1 + s);
  }
  if (to_qmatrix(space, u) != q)
    throw std::invalid_argument("matrix is not in sp(1,n+1)_Hp block form");
  return u;
}

bool in_sp(const HermitianSpace& space, const QMatrix& A) {
  if (A.rows() != space.n() || A.cols() != space.n()) throw DimensionMismatch("in_sp: matrix size");
  const RealMatrix s = space.eta_matrix() * realify(A);
  return (s + s.transpose()).is_zero();
}

bool is_valid(const HermitianSpace& space, const ParabolicElement& u) {
  return u.b.is_imaginary() && in_sp(space, u.A);
}

bool is_quaternionic_skew(const HermitianSpace& space, const RealMatrix& m) {
  RealMatrix s = space.eta_full_matrix() * m;
  s += s.transpose();
  if (!s.is_zero()) return false;
  for (int a = 1; a <= 3; ++a)
    if (!commutator(m, space.complex_structure(a)).is_zero()) return false;
  return true;
}

ParabolicElement bracket(const HermitianSpace& space, const ParabolicElement& u, const ParabolicElement& v) {
  if (u.n() != space.n() || v.n() != space.n()) throw DimensionMismatch("bracket: ambient mismatch");
  ParabolicElement w = ParabolicElement::zero(space.n());
  w.a = v.a * u.a - u.a * v.a;
  w.A = op_commutator(u.A, v.A);
  w.X = op_apply(u.A, v.X) - op_apply(v.A, u.X) + u.a.conj() * v.X - v.a.conj() * u.X;
  w.b = v.b * u.a + u.a.conj() * v.b - u.b * v.a - v.a.conj() * u.b + Scalar(2) * space.g(u.X, v.X).im();
  return w;
}

Scalar Bivector::coefficient(std::size_t i, std::size_t j) const {
  Scalar sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  for (const auto& [ij, c] : terms)
    if (ij.first == i && ij.second == j) return sign * c;
  return 0;
}

Bivector to_bivector(const HermitianSpace& space, const RealMatrix& endo) {
  const RealMatrix c = endo * space.eta_full_inverse();
  const RealMatrix anti = c + c.transpose();
  if (!anti.is_zero()) throw std::invalid_argument("endomorphism is not eta-skew");
  Bivector w;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i + 1; j < c.cols(); ++j)
      if (!is_zero(c(j, i))) w.terms.push_back({{i, j}, c(j, i)});
  return w;
}

Bivector to_bivector(const HermitianSpace& space, const ParabolicElement& u) {
  return to_bivector(space, to_matrix(space, u));
}

RealMatrix bivector_to_matrix(const HermitianSpace& space, const Bivector& w) {
  // (e_i ^ e_j) = (E_ji - E_ij) eta
  const std::size_t N = space.real_dim();
  RealMatrix c(N, N);
  for (const auto& [ij, x] : w.terms) {
    c(ij.second, ij.first) += x;
    c(ij.first, ij.second) -= x;
  }
  return c * space.eta_full_matrix();
}

Grading grading_decompose(const ParabolicElement& u) {
  const std::size_t n = u.n();
  Grading g{ParabolicElement::zero(n), ParabolicElement::translation(u.X), ParabolicElement::center(n, u.b)};
  g.g0.a = u.a;
  g.g0.A = u.A;
  return g;
}

SimElement f_projection(const ParabolicElement& u) { return {u.a.re(), u.a.im(), u.A, u.X}; }

RealMatrix to_affine(const SimElement& s) {
  const std::size_t n = s.X.dim();
  RealMatrix lin = realify(s.A) - left_multiplication(s.a1, n);
  for (std::size_t i = 0; i < 4 * n; ++i) lin(i, i) += s.a0;
  RealMatrix m(4 * n + 1, 4 * n + 1);
  m.set_block(0, 0, lin);
  const RealVector x = s.X.realify();
  for (std::size_t i = 0; i < 4 * n; ++i) m(i, 4 * n) = x[i];
  return m;
}

SimElement sim_bracket(const SimElement& s, const SimElement& t) {
  const std::size_t n = s.X.dim();
  const RealMatrix c = commutator(to_affine(s), to_affine(t));
  RealMatrix lin = c.block(0, 0, 4 * n, 4 * n);
  SimElement out;
  // The sp(1) and sp(n) parts are traceless, and tr(L_u^T Op(A)) = 0 for imaginary u.
  Scalar tr = 0;
  for (std::size_t i = 0; i < 4 * n; ++i) tr += lin(i, i);
  out.a0 = tr / Scalar(static_cast<long>(4 * n));
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const RealMatrix l = left_multiplication(Quat::unit(alpha), n);
    Scalar ip = 0;
    for (std::size_t i = 0; i < l.flat().size(); ++i) ip += l.flat()[i] * lin.flat()[i];
    out.a1[alpha] = -ip / Scalar(static_cast<long>(4 * n));
  }
  lin += left_multiplication(out.a1, n);
  for (std::size_t i = 0; i < 4 * n; ++i) lin(i, i) -= out.a0;
  out.A = QMatrix::from_real(lin);
  RealVector x(4 * n);
  for (std::size_t i = 0; i < 4 * n; ++i) x[i] = c(i, 4 * n);
  out.X = QVector::from_real(x);
  return out;
}

std::vector<QMatrix> sp_basis(const HermitianSpace& space) {
  const std::size_t n = space.n();
  const std::size_t nu = 4 * n * n;
  std::vector<QMatrix> unit;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (int c = 0; c < 4; ++c) {
        QMatrix e(n, n);
        e(s, t) = Quat::unit(c);
        unit.push_back(e);
      }
  // eta Op(A) + (eta Op(A))^T = 0, one equation per matrix entry.
  const std::size_t N = 4 * n;
  RealMatrix sys(N * N, nu);
  for (std::size_t u = 0; u < nu; ++u) {
    const RealMatrix s = space.eta_matrix() * realify(unit[u]);
    const RealMatrix sym = s + s.transpose();
    for (std::size_t r = 0; r < N * N; ++r) sys(r, u) = sym.flat()[r];
  }
  std::vector<QMatrix> out;
  for (const auto& v : nullspace(sys)) {
    QMatrix a(n, n);
    for (std::size_t u = 0; u < nu; ++u)
      if (!is_zero(v[u])) a += v[u] * unit[u];
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<QMatrix> sp_basis(std::size_t m) {
  if (m == 0) return {};
  return sp_basis(HermitianSpace::standard(m));
}

std::vector<ParabolicElement> parabolic_basis(const HermitianSpace& space) {
  const std::size_t n = space.n();
  std::vector<ParabolicElement> out;
  for (int c = 0; c < 4; ++c) out.push_back(ParabolicElement::scalar_part(n, Quat::unit(c)));
  for (const auto& A : sp_basis(space)) out.push_back(ParabolicElement::matrix_part(A));
  for (std::size_t t = 0; t < n; ++t)
    for (int c = 0; c < 4; ++c) out.push_back(ParabolicElement::translation(QVector::basis(n, t, Quat::unit(c))));
  for (int c = 1; c < 4; ++c) out.push_back(ParabolicElement::center(n, Quat::unit(c)));
  return out;
}

ParabolicElement sp1_embed(std::size_t n, const Quat& x) { return ParabolicElement::scalar_part(n, -x); }

// ---------------------------------------------------------------------------

Subalgebra::Subalgebra(std::shared_ptr<const HermitianSpace> space,
                       const std::vector<ParabolicElement>& generators)
    : space_(std::move(space)) {
  const std::size_t n = space_->n();
  const std::size_t dim = 8 + 4 * n + 4 * n * n;
  RowEchelon e(dim);
  std::vector<RealVector> coords;
  for (const auto& g : generators) {
    if (g.n() != n) throw DimensionMismatch("Subalgebra: generator dimension");
    if (!is_valid(*space_, g)) throw std::invalid_argument("Subalgebra: generator is not in sp(1,n+1)_Hp");
    RealVector v = g.coordinates();
    if (e.add_row(v)) {
      basis_.push_back(g);
      coords.push_back(std::move(v));
    }
  }
  coordinates_ = std::make_shared<const Coordinates>(std::move(coords), dim);
}

std::vector<RealMatrix> Subalgebra::matrices() const {
  std::vector<RealMatrix> out;
  for (const auto& u : basis_) out.push_back(to_matrix(*space_, u));
  return out;
}

std::optional<RealVector> Subalgebra::coords(const ParabolicElement& u) const {
  return coordinates_->coords(u.coordinates());
}

bool Subalgebra::contains(const ParabolicElement& u) const { return coordinates_->contains(u.coordinates()); }

std::optional<std::pair<std::size_t, std::size_t>> Subalgebra::closure_violation() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(bracket(*space_, basis_[i], basis_[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

std::vector<Quat> Subalgebra::pr_H() const {
  std::vector<Quat> out;
  for (const auto& u : basis_) out.push_back(u.a);
  return out;
}

std::vector<QMatrix> Subalgebra::pr_sp() const {
  std::vector<QMatrix> out;
  for (const auto& u : basis_) out.push_back(u.A);
  return out;
}

RealSubspace Subalgebra::pr_Hn() const {
  std::vector<QVector> v;
  for (const auto& u : basis_) v.push_back(u.X);
  return RealSubspace::span(space_->n(), v);
}

std::vector<Quat> Subalgebra::pr_ImH() const {
  std::vector<Quat> out;
  for (const auto& u : basis_) out.push_back(u.b);
  return out;
}

std::size_t Subalgebra::pr_H_dim() const {
  std::vector<RealVector> v;
  for (const auto& u : basis_) v.push_back({u.a[0], u.a[1], u.a[2], u.a[3]});
  return rank(v);
}

// ---------------------------------------------------------------------------

namespace {

QVector e(std::size_t n, std::size_t t, const Quat& c = Quat(1)) { return QVector::basis(n, t, c); }

std::vector<ParabolicElement> center_basis(std::size_t n) {
  return {ParabolicElement::center(n, Quat::i()), ParabolicElement::center(n, Quat::j()),
          ParabolicElement::center(n, Quat::k())};
}

void add_translations(std::vector<ParabolicElement>& out, const RealSubspace& l) {
  for (const auto& x : l.basis()) out.push_back(ParabolicElement::translation(x));
}

std::vector<Quat> h0_basis(H0 h0) {
  switch (h0) {
    case H0::zero: return {};
    case H0::Ri: return {Quat::i()};
    case H0::sp1: return {Quat::i(), Quat::j(), Quat::k()};
  }
  return {};
}

/// Structure of h given by an independent, bracket-closed generator list.
struct HStructure {
  std::size_t dim = 0;
  /// bracket_coords[i][j] = coordinates of [h_i, h_j].
  std::vector<std::vector<RealVector>> bracket_coords;
  /// Basis of h' = [h,h] in coordinates.
  std::vector<RealVector> derived;
};

RealVector matrix_coords(const QMatrix& a) {
  RealVector v;
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      for (int c = 0; c < 4; ++c) v.push_back(a(s, t)[c]);
  return v;
}

HStructure analyze_h(const std::vector<QMatrix>& gens, std::size_t m, const std::string& clause) {
  HStructure h;
  h.dim = gens.size();
  if (gens.empty()) return h;
  const auto sp = HermitianSpace::standard(m);
  std::vector<RealVector> coords;
  for (const auto& g : gens) {
    if (g.rows() != m || g.cols() != m)
      throw ValidationError(clause, "h generators must be " + std::to_string(m) + "x" + std::to_string(m));
    if (!in_sp(sp, g)) throw ValidationError(clause, "h generator is not in sp(" + std::to_string(m) + ")");
    coords.push_back(matrix_coords(g));
  }
  std::unique_ptr<Coordinates> co;
  try {
    co = std::make_unique<Coordinates>(coords, 4 * m * m);
  } catch (const std::invalid_argument&) {
    throw ValidationError(clause, "h generators are linearly dependent");
  }
  h.bracket_coords.assign(h.dim, std::vector<RealVector>(h.dim));
  std::vector<RealVector> derived;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      auto c = co->coords(matrix_coords(op_commutator(gens[i], gens[j])));
      if (!c) throw ValidationError(clause, "h is not a subalgebra (generators do not close)");
      h.bracket_coords[i][j] = *c;
      derived.push_back(*c);
    }
  h.derived = span_basis(derived, h.dim);
  return h;
}

template <class V>
V evaluate(const std::vector<V>& values, const RealVector& coords, V acc) {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) acc += coords[i] * values[i];
  return acc;
}

bool vanishes_on_derived_q(const HStructure& h, const std::vector<Quat>& vals) {
  for (const auto& d : h.derived)
    if (!evaluate(vals, d, Quat()).is_zero()) return false;
  return true;
}

bool vanishes_on_derived_s(const HStructure& h, const std::vector<Scalar>& vals) {
  for (const auto& d : h.derived)
    if (!is_zero(evaluate(vals, d, Scalar(0)))) return false;
  return true;
}

bool vanishes_on_derived_v(const HStructure& h, const std::vector<QVector>& vals, std::size_t n) {
  for (const auto& d : h.derived)
    if (!evaluate(vals, d, QVector(n)).is_zero()) return false;
  return true;
}

/// phi is a homomorphism into ImH with the commutator bracket:
/// phi([h_i, h_j]) = phi_i phi_j - phi_j phi_i.
bool is_sp1_homomorphism(const HStructure& h, const std::vector<Quat>& phi) {
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      const Quat lhs = evaluate(phi, h.bracket_coords[i][j], Quat());
      const Quat rhs = phi[i] * phi[j] - phi[j] * phi[i];
      if (lhs != rhs) return false;
    }
  return true;
}

/// Dimension of the real span of imaginary quaternions.
std::size_t image_dim(const std::vector<Quat>& vals) {
  std::vector<RealVector> v;
  for (const auto& q : vals) v.push_back({q[0], q[1], q[2], q[3]});
  return rank(v);
}

bool image_is_Ri(const std::vector<Quat>& vals) {
  if (image_dim(vals) != 1) return false;
  for (const auto& q : vals)
    if (!is_zero(q[0]) || !is_zero(q[2]) || !is_zero(q[3])) return false;
  return true;
}

bool all_zero_q(const std::vector<Quat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Quat& q) { return q.is_zero(); });
}
bool all_zero_s(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

QMatrix embed_h(const QMatrix& a, std::size_t n) { return a.embed(n, 0); }

}  // namespace

Subalgebra family_g(const FamilySpec& spec, std::shared_ptr<const HermitianSpace> space) {
  const std::size_t n = space->n();
  const std::string fam = spec.name();
  const std::string clause = "family condition";
  auto fail = [&](const std::string& what) { throw ValidationError(fam + " (" + clause + ")", what); };
  if (spec.family < 1 || spec.family > 9) throw ValidationError("family", "family must be g1..g9");

  const std::size_t hm = spec.family == 9 ? spec.k : spec.m;
  if (hm > n) fail("m must not exceed n");
  const auto& hg = spec.h_generators;
  const HStructure h = analyze_h(hg, hm, fam + " (" + clause + ")");
  auto require_values = [&](std::size_t count, const char* what) {
    if (count != h.dim) fail(std::string(what) + " needs one value per h generator");
  };
  auto check_imaginary = [&](const std::vector<Quat>& v) {
    for (const auto& q : v)
      if (!q.is_imaginary()) fail("phi values must lie in sp(1) = ImH");
  };

  std::vector<ParabolicElement> gens;
  std::vector<std::string> notes;
  const bool m_lt_n = spec.m < n;
  const RealSubspace hm_cn = build_L(*space, spec.m, 0, n - std::min(spec.m, n), {});

  switch (spec.family) {
    case 1: {
      if (spec.h0 == H0::zero) fail("h0 must be Ri or sp(1)");
      if (m_lt_n && spec.h0 != H0::Ri) fail("if m < n then h0 = Ri");
      gens.push_back(ParabolicElement::grading(n));
      for (const auto& x : h0_basis(spec.h0)) gens.push_back(sp1_embed(n, x));
      for (const auto& a : hg) gens.push_back(ParabolicElement::matrix_part(embed_h(a, n)));
      add_translations(gens, hm_cn);
      break;
    }
    case 2: {
      if (spec.m < 1) fail("requires 1 <= m");
      require_values(spec.phi_values.size(), "phi");
      check_imaginary(spec.phi_values);
      if (h.dim == 0 || all_zero_q(spec.phi_values)) fail("phi must be a non-zero homomorphism");
      if (!is_sp1_homomorphism(h, spec.phi_values)) fail("phi is not a homomorphism");
      const bool ri = image_is_Ri(spec.phi_values) && vanishes_on_derived_q(h, spec.phi_values);
      if (m_lt_n && !ri) fail("if m < n then Im phi = Ri and phi|h' = 0");
      if (!m_lt_n && !ri && image_dim(spec.phi_values) != 3)
        fail("if m = n then either Im phi = Ri and phi|h' = 0, or Im phi = sp(1)");
      gens.push_back(ParabolicElement::grading(n));
      for (std::size_t i = 0; i < h.dim; ++i) {
        ParabolicElement u = sp1_embed(n, spec.phi_values[i]);
        u.A = embed_h(hg[i], n);
        gens.push_back(u);
      }
      add_translations(gens, hm_cn);
      break;
    }
    case 3: {
      require_values(spec.varphi_values.size(), "varphi");
      if (!vanishes_on_derived_s(h, spec.varphi_values)) fail("varphi|h' = 0 is required");
      const bool nonzero = !all_zero_s(spec.varphi_values);
      if (m_lt_n && !(spec.h0 == H0::Ri && nonzero)) fail("if m < n then h0 = Ri and varphi != 0");
      if (!m_lt_n && !((spec.h0 == H0::Ri && nonzero) || spec.h0 == H0::sp1))
        fail("if m = n then either h0 = Ri and varphi != 0, or h0 = sp(1)");
      for (const auto& x : h0_basis(spec.h0)) gens.push_back(sp1_embed(n, x));
      for (std::size_t i = 0; i < h.dim; ++i) {
        ParabolicElement u = ParabolicElement::scalar_part(n, Quat(spec.varphi_values[i]));
        u.A = embed_h(hg[i], n);
        gens.push_back(u);
      }
      add_translations(gens, hm_cn);
      break;
    }
    case 4: {
      require_values(spec.varphi_values.size(), "varphi");
      require_values(spec.phi_values.size(), "phi");
      check_imaginary(spec.phi_values);
      if (!vanishes_on_derived_s(h, spec.varphi_values)) fail("varphi must be a homomorphism to R");
      if (!is_sp1_homomorphism(h, spec.phi_values)) fail("phi is not a homomorphism");
      if (m_lt_n) {
        const bool both_zero = all_zero_s(spec.varphi_values) && all_zero_q(spec.phi_values);
        if (!both_zero) {
          if (all_zero_s(spec.varphi_values)) fail("if m < n then varphi = phi = 0 or varphi != 0");
          if (!image_is_Ri(spec.phi_values)) fail("if m < n then Im phi = Ri");
          if (!vanishes_on_derived_q(h, spec.phi_values)) fail("if m < n then phi|h' = 0");
          // i*varphi and phi as maps h -> Ri must not be proportional.
          std::vector<RealVector> rows{RealVector(h.dim), RealVector(h.dim)};
          for (std::size_t i = 0; i < h.dim; ++i) {
            rows[0][i] = spec.varphi_values[i];
            rows[1][i] = spec.phi_values[i][1];
          }
          if (rank(rows) < 2) notes.push_back("i varphi and phi are proportional");
        }
      }
      for (std::size_t i = 0; i < h.dim; ++i) {
        ParabolicElement u = sp1_embed(n, spec.phi_values[i]);
        u.a += Quat(spec.varphi_values[i]);
        u.A = embed_h(hg[i], n);
        gens.push_back(u);
      }
      add_translations(gens, hm_cn);
      break;
    }
    case 5: {
      if (is_zero(spec.alpha)) fail("alpha != 0 is required");
      require_values(spec.varphi_values.size(), "varphi");
      if (all_zero_s(spec.varphi_values)) fail("varphi must be non-zero");
      if (!vanishes_on_derived_s(h, spec.varphi_values)) fail("varphi|h' = 0 is required");
      gens.push_back(ParabolicElement::scalar_part(n, Quat(spec.alpha)) + sp1_embed(n, Quat::i()));
      for (std::size_t i = 0; i < h.dim; ++i) {
        ParabolicElement u = ParabolicElement::scalar_part(n, Quat(spec.varphi_values[i]));
        u.A = embed_h(hg[i], n);
        gens.push_back(u);
      }
      add_translations(gens, hm_cn);
      break;
    }
    case 6: {
      for (const auto& a : hg) gens.push_back(ParabolicElement::matrix_part(embed_h(a, n)));
      add_translations(gens, build_L(*space, spec.m, spec.m1, spec.m2, spec.lprime));
      break;
    }
    case 7:
    case 8: {
      if (spec.m >= n) fail("n - m >= 1 is required");
      const RealSubspace l = build_L(*space, spec.m, n - spec.m, 0, {});
      auto block = [&](const Quat& c) {
        QMatrix a(n, n);
        for (std::size_t t = spec.m; t < n; ++t) a(t, t) = -c;
        return a;
      };
      if (spec.family == 7) {
        for (const auto& x : {Quat::i(), Quat::j(), Quat::k()}) {
          ParabolicElement u = sp1_embed(n, x);
          u.A = block(x);
          gens.push_back(u);
        }
        for (const auto& a : hg) gens.push_back(ParabolicElement::matrix_part(embed_h(a, n)));
      } else {
        require_values(spec.phi_values.size(), "phi");
        check_imaginary(spec.phi_values);
        if (!is_sp1_homomorphism(h, spec.phi_values)) fail("phi is not a homomorphism");
        if (image_dim(spec.phi_values) != 3) fail("phi: h -> sp(1) must be surjective");
        for (std::size_t i = 0; i < h.dim; ++i) {
          ParabolicElement u = sp1_embed(n, spec.phi_values[i]);
          u.A = embed_h(hg[i], n) + block(spec.phi_values[i]);
          gens.push_back(u);
        }
      }
      add_translations(gens, l);
      break;
    }
    case 9: {
      if (spec.k > spec.m) fail("H^k must be a quaternionic summand of L (k <= m)");
      const RealSubspace l = build_L(*space, spec.m, spec.m1, spec.m2, spec.lprime);
      std::vector<QVector> hk_vecs;
      for (std::size_t t = 0; t < spec.k; ++t)
        for (int c = 0; c < 4; ++c) hk_vecs.push_back(e(n, t, Quat::unit(c)));
      const RealSubspace hk = RealSubspace::span(n, hk_vecs);
      for (const auto& x : spec.U)
        if (x.dim() != n) throw DimensionMismatch("g9: U vector dimension");
      const RealSubspace u_space = RealSubspace::span(n, spec.U);
      if (u_space.dim() != spec.U.size()) fail("U vectors must be linearly independent");
      if (!l.contains(u_space)) fail("U must lie in L(m,m1,m2,L')");
      for (const auto& x : hk.basis())
        for (const auto& y : u_space.basis())
          if (!is_zero(space->eta(x, y))) fail("H^k and U must be eta-orthogonal");
      // V = eta-orthogonal complement of H^k + U inside L.
      const RealSubspace hu = hk + u_space;
      std::vector<RealVector> conds;
      for (const auto& y : hu.basis()) {
        RealVector row;
        for (const auto& x : l.basis()) row.push_back(space->eta(x, y));
        conds.push_back(row);
      }
      RealMatrix sys(conds.size(), l.dim());
      for (std::size_t r = 0; r < conds.size(); ++r)
        for (std::size_t c = 0; c < l.dim(); ++c) sys(r, c) = conds[r][c];
      std::vector<QVector> v_vecs;
      for (const auto& c : nullspace(sys)) v_vecs.push_back(evaluate(l.basis(), c, QVector(n)));
      const RealSubspace v_space = RealSubspace::span(n, v_vecs);
      if (hk.dim() + v_space.dim() + u_space.dim() != l.dim()) fail("L = H^k + V + U is not a direct sum");

      require_values(spec.psi_values.size(), "psi");
      for (const auto& x : spec.psi_values)
        if (x.dim() != n || !u_space.contains(x)) fail("psi values must lie in U");
      if (RealSubspace::span(n, spec.psi_values).dim() != u_space.dim()) fail("psi: h -> U must be surjective");
      if (!vanishes_on_derived_v(h, spec.psi_values, n)) fail("psi|h' = 0 is required");
      for (std::size_t i = 0; i < h.dim; ++i) {
        ParabolicElement u = ParabolicElement::matrix_part(embed_h(hg[i], n));
        u.X = spec.psi_values[i];
        gens.push_back(u);
      }
      add_translations(gens, hk + v_space);
      break;
    }
  }
  for (const auto& z : center_basis(n)) gens.push_back(z);

  Subalgebra g(std::move(space), gens);
  if (auto bad = g.closure_violation())
    throw std::logic_error(fam + ": constructed span is not bracket-closed (basis pair " +
                           std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
  g.label = fam;
  g.side_condition_notes = notes;
  g.side_conditions_ok = notes.empty();
  return g;
}

std::pair<FamilySpec, std::shared_ptr<const HermitianSpace>> minimal_family(int family) {
  FamilySpec s;
  s.family = family;
  QMatrix op_i(1, 1);
  op_i(0, 0) = Quat::i();
  const auto sp1 = sp_basis(1);  // Op(i), Op(j), Op(k)
  std::size_t n = 1;
  switch (family) {
    case 1:
      s.m = 1;
      s.h0 = H0::Ri;
      break;
    case 2:
      s.m = 1;
      s.h_generators = {op_i};
      s.phi_values = {Quat::i()};
      break;
    case 3:
      s.m = 1;
      s.h0 = H0::Ri;
      s.h_generators = {op_i};
      s.varphi_values = {1};
      break;
    case 4:
      s.m = 1;
      s.h_generators = sp1;
      for (const auto& a : sp1) {
        s.phi_values.push_back(-a(0, 0));
        s.varphi_values.push_back(0);
      }
      break;
    case 5:
      s.m = 1;
      s.alpha = 1;
      s.h_generators = {op_i};
      s.varphi_values = {1};
      break;
    case 6:
      n = 2;
      s.lprime = {BBlock::interval(2, 0)};
      break;
    case 7:
      n = 2;
      s.m = 1;
      break;
    case 8:
      n = 2;
      s.m = 1;
      s.h_generators = sp1;
      for (const auto& a : sp1) s.phi_values.push_back(-a(0, 0));
      break;
    case 9:
      n = 2;
      s.m = 1;
      s.m2 = 1;
      s.k = 1;
      s.h_generators = {op_i};
      s.U = {e(2, 1)};
      s.psi_values = {e(2, 1)};
      break;
    default:
      throw ValidationError("family", "family must be g1..g9");
  }
  return {s, std::make_shared<const HermitianSpace>(HermitianSpace::standard(n))};
}

Subalgebra lemma1_algebra(std::shared_ptr<const HermitianSpace> space) {
  const std::size_t n = space->n();
  std::vector<ParabolicElement> gens{ParabolicElement::grading(n)};
  add_translations(gens, RealSubspace::whole(n));
  for (const auto& z : center_basis(n)) gens.push_back(z);
  Subalgebra g(std::move(space), gens);
  g.label = "lemma1";
  return g;
}

std::vector<ParabolicElement> twisted_literal_generators(std::size_t n, const Scalar& alpha,
                                                           const Scalar& beta) {
  std::vector<ParabolicElement> gens;
  ParabolicElement u = ParabolicElement::grading(n);
  u.b = alpha * Quat::j() + beta * Quat::k();
  gens.push_back(u);
  ParabolicElement v = ParabolicElement::scalar_part(n, Quat::i());
  v.b = -beta * Quat::j() + alpha * Quat::k();
  gens.push_back(v);
  for (std::size_t t = 0; t < n; ++t) {
    gens.push_back(ParabolicElement::translation(e(n, t)));
    gens.push_back(ParabolicElement::translation(e(n, t, Quat::i())));
  }
  gens.push_back(ParabolicElement::center(n, Quat::i()));
  return gens;
}

Subalgebra twisted_algebra(std::shared_ptr<const HermitianSpace> space, const Scalar& alpha,
                             const Scalar& beta) {
  auto gens = twisted_literal_generators(space->n(), alpha, beta);
  gens[1].b = beta * Quat::j() - alpha * Quat::k();
  Subalgebra g(std::move(space), gens);
  g.label = "twisted";
  return g;
}

}  // namespace holonomy
