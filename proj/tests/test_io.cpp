#include <doctest.h>

#include "holonomy/errors.hpp"
#include "holonomy/io.hpp"
#include "support.hpp"

using namespace holonomy;
using io::Json;

TEST_CASE("scalar and quaternion text forms") {
  CHECK(io::to_json(frac(-3, 4)) == Json("-3/4"));
  CHECK(io::scalar_from_json(Json("6/8")) == frac(3, 4));
  CHECK(io::scalar_from_json(Json(-2)) == Scalar(-2));
  CHECK_THROWS_AS(io::scalar_from_json(Json(0.5)), std::invalid_argument);
  CHECK(io::quat_from_json(Json::parse(R"(["1", "0", "-1/2", 3])")) == Quat(1, 0, frac(-1, 2), 3));
  CHECK(io::quat_from_json(Json("2")) == Quat(2));
}

TEST_CASE("round trips on random exact data") {
  testsupport::RandomExact rnd(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Quat q = rnd.quat();
    CHECK(io::quat_from_json(io::to_json(q)) == q);
    const QVector v = rnd.qvector(3);
    CHECK(io::qvector_from_json(io::to_json(v)) == v);
    const QMatrix a = rnd.qmatrix(2, 3);
    CHECK(io::qmatrix_from_json(io::to_json(a)) == a);
    CHECK(io::real_matrix_from_json(io::to_json(realify(a))) == realify(a));
  }
}

TEST_CASE("curvature parameters and tensors round trip") {
  testsupport::RandomExact rnd(12);
  const auto space = HermitianSpace::standard(1);
  Prop1Params p = Prop1Params::zero(1);
  p.C01 = rnd.quat();
  p.S02 = rnd.qvector(1);
  p.d[3] = rnd.scalar();
  p.A0[2] = sp_basis(1)[1];
  const Json j = io::to_json(p);
  const Prop1Params back = io::params_from_json(j, 1);
  CHECK(io::to_json(back) == j);

  const CurvatureTensor r = prop1_construct(p, space);
  const Json rj = io::to_json(r);
  CHECK(io::tensor_from_json(rj, r.dim()) == r);
  CHECK(io::to_json(CurvatureTensor(r.dim())).empty());
  CHECK_THROWS_AS(io::tensor_from_json(rj, 2), DimensionMismatch);
}

TEST_CASE("family specs round trip and build the same algebra") {
  for (int f = 1; f <= 9; ++f) {
    CAPTURE(f);
    const auto [spec, space] = minimal_family(f);
    const Json j = io::to_json(spec);
    const FamilySpec back = io::family_spec_from_json(j);
    CHECK(io::to_json(back) == j);
    CHECK(family_g(back, space).dim() == family_g(spec, space).dim());
  }
  const auto s = io::family_spec_from_json(Json::parse(R"({"family": "g1", "m": 1, "h": "full", "h0": "sp1"})"));
  CHECK(s.family == 1);
  CHECK(s.h_generators.size() == 3);
  CHECK(s.h0 == H0::sp1);
  CHECK_THROWS_AS(io::family_spec_from_json(Json::parse(R"({"family": "g10"})")), ValidationError);
  CHECK_THROWS_AS(io::family_spec_from_json(Json::parse(R"({"family": 1, "h0": "sp2"})")), std::invalid_argument);
}

TEST_CASE("space and family parsing") {
  const auto s = io::space_from_json(Json::parse(R"({"n": 2})"));
  CHECK(s->n() == 2);
  CHECK(s->gram() == QMatrix::identity(2));
  const auto t = io::space_from_json(
      Json::parse(R"({"n": 2, "gram": [[1, ["0","0","0","-1/2"]], [["0","0","0","1/2"], 1]]})"));
  CHECK(t->gram()(0, 1) == frac(-1, 2) * Quat::k());
  CHECK(io::parse_family("g7") == 7);
  CHECK(io::parse_family("3") == 3);
  CHECK_THROWS_AS(io::parse_family("x"), ValidationError);
}

TEST_CASE("input hash depends only on content") {
  const Json a = Json::parse(R"({"n": 1, "family": "g1"})");
  const Json b = Json::parse(R"({"n": 1, "family": "g1"})");
  const Json c = Json::parse(R"({"n": 2, "family": "g1"})");
  CHECK(io::spec_hash(a) == io::spec_hash(b));
  CHECK(io::spec_hash(a) != io::spec_hash(c));
  CHECK(io::spec_hash(a).size() == 16);
}

TEST_CASE("malformed JSON reports its position") {
  try {
    const Json bad = Json::parse("{\n  \"n\": 1,\n  oops\n}");
    CHECK(bad.is_null());
    FAIL("expected a parse error");
  } catch (const Json::parse_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
