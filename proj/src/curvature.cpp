#include "holonomy/curvature.hpp"

#include <algorithm>
#include <stdexcept>

#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t N) {
  if (!(i < j && j < N)) throw std::out_of_range("pair_index");
  return i * N - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t N) {
  for (std::size_t i = 0; i + 1 < N; ++i) {
    const std::size_t row = N - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw std::out_of_range("pair_at");
}

// ---------------------------------------------------------------- CurvatureTensor

CurvatureTensor::CurvatureTensor(std::size_t N) : N_(N), values_(pair_count(N), RealMatrix(N, N)) {}

RealMatrix CurvatureTensor::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return RealMatrix(N_, N_);
  if (i < j) return values_[pair_index(i, j, N_)];
  return Scalar(-1) * values_[pair_index(j, i, N_)];
}

void CurvatureTensor::set(std::size_t i, std::size_t j, const RealMatrix& value) {
  if (value.rows() != N_ || value.cols() != N_) throw DimensionMismatch("CurvatureTensor::set");
  if (i == j) throw std::invalid_argument("CurvatureTensor::set: R(e_i, e_i) is zero");
  if (i < j)
    values_[pair_index(i, j, N_)] = value;
  else
    values_[pair_index(j, i, N_)] = Scalar(-1) * value;
}

RealMatrix CurvatureTensor::eval(const RealVector& u, const RealVector& v) const {
  if (u.size() != N_ || v.size() != N_) throw DimensionMismatch("CurvatureTensor::eval");
  std::vector<std::size_t> nu, nv;
  for (std::size_t i = 0; i < N_; ++i) {
    if (sgn(u[i]) != 0) nu.push_back(i);
    if (sgn(v[i]) != 0) nv.push_back(i);
  }
  RealMatrix out(N_, N_);
  for (std::size_t i : nu)
    for (std::size_t j : nv) {
      if (i == j) continue;
      const Scalar c = u[i] * v[j];
      if (i < j)
        out.add_scaled(c, values_[pair_index(i, j, N_)]);
      else
        out.add_scaled(-c, values_[pair_index(j, i, N_)]);
    }
  return out;
}

bool CurvatureTensor::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const RealMatrix& m) { return m.is_zero(); });
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& o) {
  if (o.N_ != N_) throw DimensionMismatch("CurvatureTensor +");
  for (std::size_t p = 0; p < values_.size(); ++p) values_[p] += o.values_[p];
  return *this;
}

CurvatureTensor operator*(const Scalar& s, const CurvatureTensor& r) {
  CurvatureTensor out = r;
  for (auto& m : out.values_) m *= s;
  return out;
}

RealVector CurvatureTensor::flatten() const {
  RealVector out;
  out.reserve(values_.size() * N_ * N_);
  for (const auto& m : values_) out.insert(out.end(), m.flat().begin(), m.flat().end());
  return out;
}

// ---------------------------------------------------------------- solvers

namespace {

bool is_eta_skew(const RealMatrix& m, const RealMatrix& eta) {
  RealMatrix s = eta * m;
  s += s.transpose();
  return s.is_zero();
}

void check_generators(const std::vector<RealMatrix>& gens, const RealMatrix& eta, const char* who) {
  if (eta.rows() != eta.cols()) throw DimensionMismatch(std::string(who) + ": metric not square");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].rows() != eta.rows() || gens[k].cols() != eta.rows())
      throw DimensionMismatch(std::string(who) + ": generator " + std::to_string(k));
    if (!is_eta_skew(gens[k], eta))
      throw std::invalid_argument(std::string(who) + ": generator " + std::to_string(k) + " is not skew");
  }
}

std::vector<std::array<std::size_t, 3>> strict_triples(std::size_t N) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t l = j + 1; l < N; ++l) out.push_back({i, j, l});
  return out;
}

// Column w of every generator, sparse: cols[k][w] = {(row, value)}.
using SparseColumns = std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>>;

SparseColumns sparse_columns(const std::vector<RealMatrix>& gens, std::size_t N) {
  SparseColumns cols(gens.size(), std::vector<std::vector<std::pair<std::size_t, Scalar>>>(N));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t w = 0; w < N; ++w)
      for (std::size_t z = 0; z < N; ++z)
        if (sgn(gens[k](z, w)) != 0) cols[k][w].emplace_back(z, gens[k](z, w));
  return cols;
}

std::vector<SparseRow> eliminate(std::size_t ncols, const std::vector<std::vector<SparseRow>>& blocks,
                                 std::size_t& equations) {
  RowEchelon echelon(ncols);
  equations = 0;
  for (const auto& block : blocks)
    for (const auto& row : block) {
      ++equations;
      echelon.add_row(row);
    }
  return echelon.nullspace();
}

RealMatrix combine(const std::vector<RealMatrix>& gens, std::size_t N, const SparseRow& row, std::size_t offset) {
  RealMatrix m(N, N);
  const std::size_t d = gens.size();
  auto it = std::lower_bound(row.begin(), row.end(), offset,
                             [](const std::pair<std::size_t, Scalar>& e, std::size_t c) { return e.first < c; });
  for (; it != row.end() && it->first < offset + d; ++it) m.add_scaled(it->second, gens[it->first - offset]);
  return m;
}

}  // namespace

CurvatureTensor CurvatureSpace::tensor(std::size_t index) const {
  CurvatureTensor r(N);
  const std::size_t d = generators.size();
  for (std::size_t p = 0; p < pair_count(N); ++p) {
    const auto [i, j] = pair_at(p, N);
    r.set(i, j, combine(generators, N, basis[index], p * d));
  }
  return r;
}

RealVector CurvatureSpace::value_coords(std::size_t index, std::size_t pair) const {
  const std::size_t d = generators.size();
  RealVector out(d);
  const SparseRow& row = basis[index];
  auto it = std::lower_bound(row.begin(), row.end(), pair * d,
                             [](const std::pair<std::size_t, Scalar>& e, std::size_t c) { return e.first < c; });
  for (; it != row.end() && it->first < (pair + 1) * d; ++it) out[it->first - pair * d] = it->second;
  return out;
}

CurvatureSpace solve_R(const std::vector<RealMatrix>& gens, const RealMatrix& eta) {
  check_generators(gens, eta, "solve_R");
  const std::size_t N = eta.rows();
  const std::size_t d = gens.size();
  CurvatureSpace out;
  out.N = N;
  out.generators = gens;
  if (d == 0 || N < 2) return out;

  const auto triples = strict_triples(N);
  const SparseColumns cols = sparse_columns(gens, N);
  std::vector<std::vector<SparseRow>> blocks(triples.size());
  parallel_for(triples.size(), [&](std::size_t t) {
    const auto [i, j, l] = triples[t];
    // R(i,j)l + R(j,l)i + R(l,i)j; (l,i) is stored as -(i,l).
    const std::array<std::pair<std::size_t, Scalar>, 3> terms = {
        std::pair<std::size_t, Scalar>{pair_index(i, j, N), Scalar(1)},
        std::pair<std::size_t, Scalar>{pair_index(j, l, N), Scalar(1)},
        std::pair<std::size_t, Scalar>{pair_index(i, l, N), Scalar(-1)}};
    const std::array<std::size_t, 3> hit = {l, i, j};
    std::vector<SparseRow> rows(N);
    for (int c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [z, v] : cols[k][hit[c]]) rows[z].emplace_back(terms[c].first * d + k, terms[c].second * v);
    for (auto& r : rows) {
      if (r.empty()) continue;
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      blocks[t].push_back(std::move(r));
    }
  });
  out.basis = eliminate(pair_count(N) * d, blocks, out.equations);
  return out;
}

CurvatureSpace solve_R(const Subalgebra& g) { return solve_R(g.matrices(), g.space().eta_full_matrix()); }

std::vector<RealMatrix> PSpace::tensor(std::size_t index) const {
  std::vector<RealMatrix> out;
  const std::size_t d = generators.size();
  for (std::size_t a = 0; a < N; ++a) out.push_back(combine(generators, N, basis[index], a * d));
  return out;
}

PSpace solve_P(const std::vector<RealMatrix>& gens, const RealMatrix& eta) {
  check_generators(gens, eta, "solve_P");
  const std::size_t N = eta.rows();
  const std::size_t d = gens.size();
  PSpace out;
  out.N = N;
  out.generators = gens;
  if (d == 0) return out;
  std::vector<RealMatrix> eg;
  for (const auto& m : gens) eg.push_back(eta * m);
  // eta(P(a)b, c) = sum_k P_{a,k} (eta g_k)(c, b); skewness makes the cyclic sum alternating,
  // so strictly increasing triples suffice.
  const auto triples = strict_triples(N);
  std::vector<std::vector<SparseRow>> blocks(triples.size());
  parallel_for(triples.size(), [&](std::size_t t) {
    const auto [x, y, z] = triples[t];
    const std::array<std::array<std::size_t, 3>, 3> cyc = {{{x, y, z}, {y, z, x}, {z, x, y}}};
    RealVector row(N * d);
    for (const auto& [a, b, c] : cyc)
      for (std::size_t k = 0; k < d; ++k) row[a * d + k] += eg[k](c, b);
    SparseRow s = to_sparse(row);
    if (!s.empty()) blocks[t].push_back(std::move(s));
  });
  std::size_t equations = 0;
  out.basis = eliminate(N * d, blocks, equations);
  return out;
}

std::vector<RealMatrix> sp_generators(const HermitianSpace& space) {
  std::vector<RealMatrix> out;
  for (const auto& a : sp_basis(space)) out.push_back(realify(a));
  return out;
}

// ---------------------------------------------------------------- identities

bool satisfies_bianchi(const CurvatureTensor& r, std::array<std::size_t, 3>* violation) {
  const std::size_t N = r.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t l = j + 1; l < N; ++l) {
        const RealMatrix& rij = r.stored(pair_index(i, j, N));
        const RealMatrix& rjl = r.stored(pair_index(j, l, N));
        const RealMatrix& ril = r.stored(pair_index(i, l, N));
        for (std::size_t z = 0; z < N; ++z)
          if (rij(z, l) + rjl(z, i) - ril(z, j) != 0) {
            if (violation) *violation = {i, j, l};
            return false;
          }
      }
  return true;
}

bool satisfies_cyclic_P(const std::vector<RealMatrix>& p, const RealMatrix& eta) {
  const std::size_t N = eta.rows();
  if (p.size() != N) throw DimensionMismatch("satisfies_cyclic_P");
  std::vector<RealMatrix> ep;
  for (const auto& m : p) ep.push_back(eta * m);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z)
        if (ep[x](z, y) + ep[y](x, z) + ep[z](y, x) != 0) return false;
  return true;
}

namespace {

RealVector unit_vector(std::size_t N, std::size_t i) {
  RealVector v(N);
  v[i] = 1;
  return v;
}

Scalar eta_wedge(const RealMatrix& eta, std::size_t i, std::size_t j, std::size_t z, std::size_t w) {
  return eta(i, z) * eta(j, w) - eta(i, w) * eta(j, z);
}

}  // namespace

IdentityReport check_curvature_identities(const HermitianSpace& space, const CurvatureTensor& r) {
  const std::size_t N = space.real_dim();
  if (r.dim() != N) throw DimensionMismatch("check_curvature_identities");
  const RealMatrix& eta = space.eta_full_matrix();
  const std::size_t np = pair_count(N);
  IdentityReport rep;

  std::array<std::size_t, 3> v{};
  if (!satisfies_bianchi(r, &v)) {
    rep.bianchi = false;
    rep.bianchi_violation = v;
  }

  std::vector<RealMatrix> s(np);
  for (std::size_t p = 0; p < np; ++p) s[p] = eta * r.stored(p);
  for (std::size_t p = 0; p < np && rep.eq_star; ++p) {
    const auto [u, vv] = pair_at(p, N);
    for (std::size_t q = 0; q < np; ++q) {
      const auto [z, w] = pair_at(q, N);
      if (s[p](w, z) != s[q](vv, u)) {
        rep.eq_star = false;
        break;
      }
    }
  }

  // eta^eta(R(u^v), z^w) through the bivector form of each value.
  try {
    std::vector<Bivector> biv(np);
    for (std::size_t p = 0; p < np; ++p) biv[p] = to_bivector(space, r.stored(p));
    RealMatrix pairing(np, np);
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t q = 0; q < np; ++q) {
        const auto [z, w] = pair_at(q, N);
        Scalar acc = 0;
        for (const auto& [ij, c] : biv[p].terms) acc += c * eta_wedge(eta, ij.first, ij.second, z, w);
        pairing(p, q) = acc;
      }
    rep.sym_R = pairing == pairing.transpose();
  } catch (const std::invalid_argument&) {
    rep.sym_R = false;
  }

  for (int a = 1; a <= 3 && rep.ri; ++a) {
    const RealMatrix& I = space.complex_structure(a);
    for (std::size_t x = 0; x < N && rep.ri; ++x)
      for (std::size_t y = 0; y < N; ++y)
        if (r.eval(I.column(x), unit_vector(N, y)) != Scalar(-1) * r.eval(unit_vector(N, x), I.column(y))) {
          rep.ri = false;
          break;
        }
  }

  const Quat x(Scalar(1), Scalar(2), Scalar(-1), frac(1, 2));
  const RealMatrix lx = left_multiplication(x, space.n() + 2);
  const RealMatrix lxc = left_multiplication(x.conj(), space.n() + 2);
  for (std::size_t a = 0; a < N && rep.ri_quaternionic; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (r.eval(lx.column(a), unit_vector(N, b)) != r.eval(unit_vector(N, a), lxc.column(b))) {
        rep.ri_quaternionic = false;
        break;
      }

  const std::size_t q0 = space.q_index(0), q1 = space.q_index(1), q2 = space.q_index(2), q3 = space.q_index(3);
  bool ok = r(q0, q1) == Scalar(-1) * r(q2, q3) && r(q0, q2) == r(q1, q3) && r(q0, q3) == Scalar(-1) * r(q1, q2);
  for (std::size_t p = 0; p < 4 && ok; ++p)
    for (std::size_t y = 0; y < space.q_index(0); ++y)
      if (y != p && !r(p, y).is_zero()) {
        ok = false;
        break;
      }
  rep.triple_star = ok;
  return rep;
}

// ---------------------------------------------------------------- Berger

BergerReport berger_check(const Subalgebra& g) { return berger_check(g, solve_R(g)); }

BergerReport berger_check(const Subalgebra& g, const CurvatureSpace& rspace) {
  const HermitianSpace& space = g.space();
  const std::size_t N = space.real_dim();
  const std::size_t d = g.dim();
  BergerReport rep;
  rep.dim_g = d;
  rep.dim_R = rspace.dim();
  RowEchelon span(d);
  for (std::size_t t = 0; t < rspace.dim() && span.rank() < d; ++t)
    for (std::size_t p = 0; p < pair_count(N) && span.rank() < d; ++p) span.add_row(rspace.value_coords(t, p));
  rep.span_dim = span.rank();
  rep.is_berger = rep.span_dim == d;

  const std::size_t pq = pair_index(space.q_index(0), space.q_index(2), N);
  const auto& gens = rspace.generators;
  for (std::size_t t = 0; t < rspace.dim() && rep.s02_zero; ++t) {
    const RealVector c = rspace.value_coords(t, pq);
    for (std::size_t x = 0; x < 4 * space.n(); ++x) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc += c[k] * gens[k](4 + x, space.q_index(0));
      if (acc != 0) {
        rep.s02_zero = false;
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- parametric tensors

Prop1Params Prop1Params::zero(std::size_t n) {
  Prop1Params p;
  p.A0 = {QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
  p.S01 = QVector(n);
  p.S02 = QVector(n);
  p.Rprime = CurvatureTensor(4 * n);
  p.P0.assign(4 * n, RealMatrix(4 * n, 4 * n));
  p.d.fill(Scalar(0));
  return p;
}

namespace {

const Quat& unit_q(int r) {
  static const std::array<Quat, 4> u = {Quat::unit(0), Quat::unit(1), Quat::unit(2), Quat::unit(3)};
  return u[r];
}

bool in_span(const std::vector<RealMatrix>& gens, const RealMatrix& m) {
  RowEchelon e(m.rows() * m.cols());
  for (const auto& g : gens) e.add_row(g.flat());
  return e.contains(m.flat());
}

RealMatrix embed_inner(std::size_t N, const RealMatrix& a) {
  RealMatrix m(N, N);
  m.set_block(4, 4, a);
  return m;
}

}  // namespace

std::array<std::array<Quat, 4>, 4> prop1_C(const Prop1Params& prm) {
  std::array<std::array<Quat, 4>, 4> C{};
  C[0][1] = prm.C01;
  C[0][2] = prm.C02;
  C[0][3] = prm.C02 * unit_q(1) - prm.C01 * unit_q(2);
  for (int r = 1; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) C[r][s] = C[0][r] * unit_q(s) - C[0][s] * unit_q(r);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < r; ++s) C[r][s] = -C[s][r];
  return C;
}

std::array<std::array<Quat, 4>, 4> prop1_D(const Prop1Params& prm) {
  const Quat &I = unit_q(1), &J = unit_q(2), &K = unit_q(3);
  std::array<std::array<Quat, 4>, 4> D{};
  D[0][1] = prm.d[0] * I + prm.d[1] * J + prm.d[2] * K;
  D[0][2] = prm.d[1] * I + prm.d[3] * J + prm.d[4] * K;
  D[0][3] = J * D[0][1] - I * D[0][2];
  for (int r = 1; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) D[r][s] = unit_q(r) * D[0][s] - unit_q(s) * D[0][r];
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < r; ++s) D[r][s] = -D[s][r];
  return D;
}

std::array<std::array<QVector, 4>, 4> prop1_S(const Prop1Params& prm) {
  const std::size_t n = prm.S01.dim();
  std::array<std::array<QVector, 4>, 4> S;
  for (auto& row : S) row.fill(QVector(n));
  S[0][1] = prm.S01;
  S[0][2] = prm.S02;
  S[0][3] = unit_q(2) * prm.S01 - unit_q(1) * prm.S02;
  for (int r = 1; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) S[r][s] = unit_q(r) * S[0][s] - unit_q(s) * S[0][r];
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < r; ++s) S[r][s] = -S[s][r];
  return S;
}

Quat prop1_theta(const Prop1Params& prm, const HermitianSpace& space, int s, const QVector& X) {
  if (s != 0) return -prop1_theta(prm, space, 0, unit_q(s) * X);
  const auto S = prop1_S(prm);
  Quat acc;
  for (int a = 1; a <= 3; ++a) acc += unit_q(a) * space.g(X, S[0][a]);
  return frac(1, 2) * acc;
}

CurvatureTensor prop1_construct(const Prop1Params& prm, const HermitianSpace& space) {
  const std::size_t n = space.n();
  const std::size_t N = space.real_dim();
  const std::size_t m = 4 * n;
  const char* clause = "prop1_construct";
  for (const auto& a : prm.A0)
    if (a.rows() != n || a.cols() != n || !in_sp(space, a)) throw ValidationError(clause, "A0s must lie in sp(n)");
  if (prm.S01.dim() != n || prm.S02.dim() != n) throw DimensionMismatch("prop1_construct: S01/S02");
  if (prm.Rprime.dim() != m || prm.P0.size() != m) throw DimensionMismatch("prop1_construct: R'/P0");
  const auto spg = sp_generators(space);
  for (std::size_t p = 0; p < pair_count(m); ++p)
    if (!in_span(spg, prm.Rprime.stored(p))) throw ValidationError(clause, "R' must take values in sp(n)");
  if (!satisfies_bianchi(prm.Rprime)) throw ValidationError(clause, "R' violates the Bianchi identity");
  for (const auto& v : prm.P0)
    if (v.rows() != m || v.cols() != m || !in_span(spg, v)) throw ValidationError(clause, "P0 must take values in sp(n)");
  if (!satisfies_cyclic_P(prm.P0, space.eta_matrix())) throw ValidationError(clause, "P0 violates the cyclic identity");

  const Quat &I = unit_q(1), &J = unit_q(2), &K = unit_q(3);
  const auto C = prop1_C(prm);
  const auto D = prop1_D(prm);
  const auto S = prop1_S(prm);
  std::array<std::array<Quat, 4>, 4> B;
  std::array<Quat, 4> br0;
  for (int r = 0; r < 4; ++r)
    br0[r] = frac(1, 2) * (I * unit_q(r) * C[0][1] + J * unit_q(r) * C[0][2] + K * unit_q(r) * C[0][3]);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) B[r][s] = unit_q(r) * C[0][s] + unit_q(s) * br0[r];

  std::array<std::array<QMatrix, 4>, 4> A;
  for (auto& row : A) row.fill(QMatrix(n, n));
  A[0][1] = prm.A0[0];
  A[0][2] = prm.A0[1];
  A[0][3] = prm.A0[2];
  A[2][3] = -prm.A0[0];
  A[1][3] = prm.A0[1];
  A[1][2] = -prm.A0[2];

  auto T0 = [&](const QVector& X) {
    QVector acc(n);
    for (int a = 1; a <= 3; ++a) acc += unit_q(a) * op_apply(prm.A0[a - 1], X);
    return frac(-1, 2) * acc;
  };
  auto theta0 = [&](const QVector& X) { return prop1_theta(prm, space, 0, X); };
  auto P0 = [&](const QVector& X) {
    const RealVector xr = X.realify();
    RealMatrix acc(m, m);
    for (std::size_t a = 0; a < m; ++a)
      if (sgn(xr[a]) != 0) acc.add_scaled(xr[a], prm.P0[a]);
    return acc;
  };
  auto elem = [&](const Quat& a, const QMatrix& Am, const QVector& X, const Quat& b) {
    return to_matrix(space, ParabolicElement{a, Am, X, b});
  };
  auto rv = [&](std::size_t t) {
    RealVector v(m);
    v[t] = 1;
    return QVector::from_real(v);
  };
  const QMatrix zA(n, n);
  const QVector zX(n);
  auto P = [](int r) { return static_cast<std::size_t>(r); };
  auto E = [](std::size_t t) { return 4 + t; };
  auto Q = [&](int s) { return space.q_index(s); };

  CurvatureTensor R(N);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) R.set(P(r), Q(s), elem(Quat(), zA, zX, B[r][s]));

  for (int s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      const QVector X = rv(t);
      QVector T;
      Quat th;
      RealMatrix Ps;
      if (s == 0) {
        T = T0(X);
        th = theta0(X);
        Ps = P0(X);
      } else {
        const QVector IX = unit_q(s) * X;
        T = -T0(IX);
        th = Scalar(-1) * theta0(IX);
        Ps = Scalar(-1) * P0(IX);
      }
      // R(I_s q, X) = (0, P_s X, T_s X, theta_s X) and the tensor is stored on (X, I_s q).
      RealMatrix v = elem(Quat(), zA, T, th) + embed_inner(N, Ps);
      R.set(E(t), Q(s), Scalar(-1) * v);
    }

  std::vector<RealMatrix> p0v(m);
  for (std::size_t t = 0; t < m; ++t) p0v[t] = P0(rv(t));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t u = t + 1; u < m; ++u) {
      const QVector X = rv(t), Y = rv(u);
      const RealVector lxy = p0v[u] * X.realify();
      RealVector l2 = p0v[t] * Y.realify();
      RealVector l(m);
      for (std::size_t c = 0; c < m; ++c) l[c] = lxy[c] - l2[c];
      const Quat tau = space.g(Y, T0(X)) - space.g(X, T0(Y));
      R.set(E(t), E(u), elem(Quat(), zA, QVector::from_real(l), tau) + embed_inner(N, prm.Rprime(t, u)));
    }

  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) R.set(Q(r), Q(s), elem(C[r][s], A[r][s], S[r][s], D[r][s]));
  return R;
}

// ---------------------------------------------------------------- contraction identities

LPReport check_LP(const HermitianSpace& space, const CurvatureTensor& R) {
  const std::size_t n = space.n();
  const std::size_t m = 4 * n;
  if (R.dim() != space.real_dim()) throw DimensionMismatch("check_LP");
  const RealMatrix& eta = space.eta_full_matrix();
  const RealMatrix& ein = space.eta_matrix();
  const std::size_t q0 = space.q_index(0);
  auto Qi = [&](int s) { return space.q_index(s); };
  auto Ei = [](std::size_t t) { return 4 + t; };

  auto dec_a = [](const RealMatrix& M) { return Quat(M(0, 0), M(1, 0), M(2, 0), M(3, 0)); };
  auto dec_b = [&](const RealMatrix& M) { return Quat(M(0, q0), M(1, q0), M(2, q0), M(3, q0)); };
  auto dec_X = [&](const RealMatrix& M) {
    RealVector x(m);
    for (std::size_t c = 0; c < m; ++c) x[c] = M(4 + c, q0);
    return x;
  };
  auto dec_A = [&](const RealMatrix& M) { return M.block(4, 4, m, m); };
  // eta(x p, I_s q) for a quaternion x.
  auto eta_pq = [&](const Quat& x, int s) {
    Scalar acc = 0;
    for (int c = 0; c < 4; ++c) acc += x[c] * eta(c, Qi(s));
    return acc;
  };
  auto ein_col = [&](const RealVector& v, std::size_t x) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < m; ++c) acc += v[c] * ein(c, x);
    return acc;
  };
  auto unit = [&](std::size_t y) {
    RealVector v(m);
    v[y] = 1;
    return v;
  };

  LPReport rep;
  for (std::size_t x = 0; x < m && rep.l_p0; ++x) {
    const RealMatrix P = dec_A(R(q0, Ei(x)));
    for (std::size_t y = 0; y < m && rep.l_p0; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (ein_col(dec_X(R(Ei(y), Ei(z))), x) != ein_col(P * unit(y), z)) {
          rep.l_p0 = false;
          break;
        }
  }
  for (int r = 0; r < 4 && rep.tau_a; ++r)
    for (int s = 0; s < 4 && rep.tau_a; ++s) {
      const RealMatrix Ars = dec_A(R(Qi(r), Qi(s)));
      for (std::size_t x = 0; x < m && rep.tau_a; ++x)
        for (std::size_t y = 0; y < m; ++y)
          if (eta_pq(unit_q(r) * dec_b(R(Ei(x), Ei(y))), s) != ein_col(Ars * unit(x), y)) {
            rep.tau_a = false;
            break;
          }
    }
  for (int r = 0; r < 4 && rep.theta_s; ++r)
    for (int s = 0; s < 4 && rep.theta_s; ++s)
      for (int t = 0; t < 4 && rep.theta_s; ++t) {
        const QVector Srt = QVector::from_real(dec_X(R(Qi(r), Qi(t))));
        const RealVector IsS = (unit_q(s) * Srt).realify();
        for (std::size_t x = 0; x < m; ++x)
          if (eta_pq(unit_q(r) * dec_b(R(Qi(s), Ei(x))), t) != ein_col(IsS, x)) {
            rep.theta_s = false;
            break;
          }
      }
  for (int t = 0; t < 4 && rep.b_c; ++t)
    for (int t1 = 0; t1 < 4 && rep.b_c; ++t1) {
      const Quat C = dec_a(R(Qi(t), Qi(t1)));
      for (int r = 0; r < 4 && rep.b_c; ++r)
        for (int s = 0; s < 4; ++s)
          if (eta_pq(unit_q(t) * dec_b(R(static_cast<std::size_t>(r), Qi(s))), t1) != eta_pq(unit_q(r) * C, s)) {
            rep.b_c = false;
            break;
          }
    }
  return rep;
}

// ---------------------------------------------------------------- rank check

std::vector<Prop1Params> prop1_parameter_basis(const HermitianSpace& space) {
  const std::size_t n = space.n();
  const std::size_t m = 4 * n;
  const Prop1Params zero = Prop1Params::zero(n);
  std::vector<Prop1Params> out;
  for (int c = 0; c < 4; ++c) {
    Prop1Params p = zero;
    p.C01 = Quat::unit(c);
    out.push_back(p);
  }
  for (int c = 0; c < 4; ++c) {
    Prop1Params p = zero;
    p.C02 = Quat::unit(c);
    out.push_back(p);
  }
  for (int c = 0; c < 5; ++c) {
    Prop1Params p = zero;
    p.d[c] = 1;
    out.push_back(p);
  }
  const auto spb = sp_basis(space);
  for (int a = 0; a < 3; ++a)
    for (const auto& A : spb) {
      Prop1Params p = zero;
      p.A0[a] = A;
      out.push_back(p);
    }
  for (int which = 0; which < 2; ++which)
    for (std::size_t t = 0; t < m; ++t) {
      Prop1Params p = zero;
      RealVector v(m);
      v[t] = 1;
      (which == 0 ? p.S01 : p.S02) = QVector::from_real(v);
      out.push_back(p);
    }
  const auto spg = sp_generators(space);
  const CurvatureSpace rsp = solve_R(spg, space.eta_matrix());
  for (std::size_t t = 0; t < rsp.dim(); ++t) {
    Prop1Params p = zero;
    p.Rprime = rsp.tensor(t);
    out.push_back(p);
  }
  const PSpace psp = solve_P(spg, space.eta_matrix());
  for (std::size_t t = 0; t < psp.dim(); ++t) {
    Prop1Params p = zero;
    p.P0 = psp.tensor(t);
    out.push_back(p);
  }
  return out;
}

Prop1RankReport prop1_rank_check(const HermitianSpace& space) {
  Prop1RankReport rep;
  const auto spg = sp_generators(space);
  rep.dim_sp = spg.size();
  rep.dim_R_sp = solve_R(spg, space.eta_matrix()).dim();
  rep.dim_P_sp = solve_P(spg, space.eta_matrix()).dim();

  const auto params = prop1_parameter_basis(space);
  rep.parameter_count = params.size();
  std::vector<CurvatureTensor> images(params.size());
  std::vector<char> bianchi(params.size(), 1), valued(params.size(), 1);
  parallel_for(params.size(), [&](std::size_t i) {
    images[i] = prop1_construct(params[i], space);
    bianchi[i] = satisfies_bianchi(images[i]);
    for (std::size_t p = 0; p < pair_count(space.real_dim()); ++p) {
      try {
        if (!is_valid(space, from_matrix(space, images[i].stored(p)))) valued[i] = 0;
      } catch (const std::invalid_argument&) {
        valued[i] = 0;
      }
      if (!valued[i]) break;
    }
  });
  RowEchelon e(pair_count(space.real_dim()) * space.real_dim() * space.real_dim());
  for (std::size_t i = 0; i < images.size(); ++i) {
    e.add_row(images[i].flatten());
    rep.images_satisfy_bianchi = rep.images_satisfy_bianchi && bianchi[i];
    rep.images_in_solution_space = rep.images_in_solution_space && valued[i];
  }
  rep.rank = e.rank();

  std::vector<RealMatrix> gens;
  for (const auto& u : parabolic_basis(space)) gens.push_back(to_matrix(space, u));
  rep.dim_R = solve_R(gens, space.eta_full_matrix()).dim();
  return rep;
}

}  // namespace holonomy
