#include "holonomy/io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "holonomy/errors.hpp"

namespace holonomy::io {

namespace {

void expect_array(const Json& j, const char* what, std::size_t size = SIZE_MAX) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  if (size != SIZE_MAX && j.size() != size)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(size) + " entries");
}

}  // namespace

Json to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw std::invalid_argument("scalar: expected \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Quat& q) { return Json::array({to_json(q[0]), to_json(q[1]), to_json(q[2]), to_json(q[3])}); }

Quat quat_from_json(const Json& j) {
  if (!j.is_array()) return Quat(scalar_from_json(j));
  expect_array(j, "quaternion", 4);
  return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2]), scalar_from_json(j[3])};
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v.coords()) out.push_back(to_json(q));
  return out;
}

QVector qvector_from_json(const Json& j) {
  expect_array(j, "quaternion vector");
  QVector v(j.size());
  for (std::size_t t = 0; t < j.size(); ++t) v[t] = quat_from_json(j[t]);
  return v;
}

Json to_json(const QMatrix& a) {
  Json out = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    out.push_back(row);
  }
  return out;
}

QMatrix qmatrix_from_json(const Json& j) {
  expect_array(j, "quaternion matrix");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  QMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    expect_array(j[r], "quaternion matrix row", cols);
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = quat_from_json(j[r][c]);
  }
  return a;
}

Json to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

RealMatrix real_matrix_from_json(const Json& j) {
  expect_array(j, "matrix");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  RealMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    expect_array(j[r], "matrix row", cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const ParabolicElement& u) {
  Json out;
  out["a"] = to_json(u.a);
  out["A"] = to_json(u.A);
  out["X"] = to_json(u.X);
  out["b"] = to_json(u.b);
  return out;
}

Json to_json(const CurvatureTensor& r) {
  Json out = Json::array();
  const std::size_t N = r.dim();
  for (std::size_t p = 0; p < pair_count(N); ++p) {
    if (r.stored(p).is_zero()) continue;
    const auto [i, j] = pair_at(p, N);
    Json e;
    e["bivector"] = Json::array({i, j});
    e["matrix"] = to_json(r.stored(p));
    out.push_back(e);
  }
  return out;
}

CurvatureTensor tensor_from_json(const Json& j, std::size_t N) {
  expect_array(j, "curvature tensor");
  CurvatureTensor r(N);
  for (const auto& e : j) {
    const auto& b = e.at("bivector");
    expect_array(b, "bivector", 2);
    const auto i = b[0].get<std::size_t>(), k = b[1].get<std::size_t>();
    if (i >= N || k >= N) throw DimensionMismatch("curvature tensor: bivector index out of range");
    r.set(i, k, real_matrix_from_json(e.at("matrix")));
  }
  return r;
}

std::shared_ptr<const HermitianSpace> space_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  if (j.contains("gram")) return std::make_shared<const HermitianSpace>(HermitianSpace::make(n, qmatrix_from_json(j["gram"])));
  return std::make_shared<const HermitianSpace>(HermitianSpace::standard(n));
}

int parse_family(const std::string& text) {
  std::string t = text;
  if (!t.empty() && (t[0] == 'g' || t[0] == 'G')) t = t.substr(1);
  if (t.size() == 1 && t[0] >= '1' && t[0] <= '9') return t[0] - '0';
  throw ValidationError("family", "unknown family '" + text + "' (expected g1..g9)");
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec s;
  const Json& f = j.at("family");
  s.family = f.is_number_integer() ? f.get<int>() : parse_family(f.get<std::string>());
  if (s.family < 1 || s.family > 9) throw ValidationError("family", "family must be g1..g9");
  s.m = j.value("m", std::size_t{0});
  s.m1 = j.value("m1", std::size_t{0});
  s.m2 = j.value("m2", std::size_t{0});
  s.k = j.value("k", std::size_t{0});
  const Json h = j.value("h", Json("zero"));
  if (h.is_string()) {
    const auto name = h.get<std::string>();
    if (name == "full")
      s.h_generators = sp_basis(s.family == 9 ? s.k : s.m);
    else if (name != "zero")
      throw std::invalid_argument("h: expected \"full\", \"zero\" or a list of matrices");
  } else {
    for (const auto& a : h) s.h_generators.push_back(qmatrix_from_json(a));
  }
  const auto h0 = j.value("h0", std::string("zero"));
  if (h0 == "zero")
    s.h0 = H0::zero;
  else if (h0 == "Ri")
    s.h0 = H0::Ri;
  else if (h0 == "sp1")
    s.h0 = H0::sp1;
  else
    throw std::invalid_argument("h0: expected zero, Ri or sp1");
  for (const auto& q : j.value("phi", Json::array())) s.phi_values.push_back(quat_from_json(q));
  for (const auto& x : j.value("varphi", Json::array())) s.varphi_values.push_back(scalar_from_json(x));
  for (const auto& v : j.value("psi", Json::array())) s.psi_values.push_back(qvector_from_json(v));
  if (j.contains("alpha")) s.alpha = scalar_from_json(j["alpha"]);
  for (const auto& b : j.value("Lprime", Json::array())) s.lprime.push_back(BBlock{b.get<std::vector<std::size_t>>()});
  for (const auto& v : j.value("U", Json::array())) s.U.push_back(qvector_from_json(v));
  return s;
}

Json to_json(const FamilySpec& s) {
  Json out;
  out["family"] = s.name();
  out["m"] = s.m;
  out["m1"] = s.m1;
  out["m2"] = s.m2;
  out["k"] = s.k;
  Json h = Json::array();
  for (const auto& a : s.h_generators) h.push_back(to_json(a));
  out["h"] = h;
  out["h0"] = s.h0 == H0::zero ? "zero" : s.h0 == H0::Ri ? "Ri" : "sp1";
  Json phi = Json::array(), varphi = Json::array(), psi = Json::array(), lp = Json::array(), u = Json::array();
  for (const auto& q : s.phi_values) phi.push_back(to_json(q));
  for (const auto& x : s.varphi_values) varphi.push_back(to_json(x));
  for (const auto& v : s.psi_values) psi.push_back(to_json(v));
  for (const auto& b : s.lprime) lp.push_back(b.indices);
  for (const auto& v : s.U) u.push_back(to_json(v));
  out["phi"] = phi;
  out["varphi"] = varphi;
  out["psi"] = psi;
  out["alpha"] = to_json(s.alpha);
  out["Lprime"] = lp;
  out["U"] = u;
  return out;
}

Prop1Params params_from_json(const Json& j, std::size_t n) {
  Prop1Params p = Prop1Params::zero(n);
  if (j.contains("C01")) p.C01 = quat_from_json(j["C01"]);
  if (j.contains("C02")) p.C02 = quat_from_json(j["C02"]);
  if (j.contains("A0")) {
    expect_array(j["A0"], "A0", 3);
    for (int a = 0; a < 3; ++a) p.A0[a] = qmatrix_from_json(j["A0"][a]);
  }
  if (j.contains("S01")) p.S01 = qvector_from_json(j["S01"]);
  if (j.contains("S02")) p.S02 = qvector_from_json(j["S02"]);
  if (j.contains("d")) {
    expect_array(j["d"], "d", 5);
    for (int c = 0; c < 5; ++c) p.d[c] = scalar_from_json(j["d"][c]);
  }
  if (j.contains("Rprime")) p.Rprime = tensor_from_json(j["Rprime"], 4 * n);
  if (j.contains("P0")) {
    expect_array(j["P0"], "P0", 4 * n);
    for (std::size_t a = 0; a < 4 * n; ++a) p.P0[a] = real_matrix_from_json(j["P0"][a]);
  }
  return p;
}

Json to_json(const Prop1Params& p) {
  Json out;
  out["C01"] = to_json(p.C01);
  out["C02"] = to_json(p.C02);
  out["A0"] = Json::array({to_json(p.A0[0]), to_json(p.A0[1]), to_json(p.A0[2])});
  out["S01"] = to_json(p.S01);
  out["S02"] = to_json(p.S02);
  Json d = Json::array();
  for (const auto& x : p.d) d.push_back(to_json(x));
  out["d"] = d;
  out["Rprime"] = to_json(p.Rprime);
  Json p0 = Json::array();
  for (const auto& m : p.P0) p0.push_back(to_json(m));
  out["P0"] = p0;
  return out;
}

std::string spec_hash(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace holonomy::io
