#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "holonomy/symmetric_pair.hpp"

namespace holonomy::io {

/// Insertion-ordered JSON so that reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Scalars are "p/q" strings; integers are also accepted on input.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// Quaternions are [c0, c1, c2, c3].
Json to_json(const Quat& q);
Quat quat_from_json(const Json& j);

Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);
Json to_json(const QMatrix& a);
QMatrix qmatrix_from_json(const Json& j);
Json to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);
Json to_json(const ParabolicElement& u);

/// Non-zero values only: [{"bivector": [i, j], "matrix": ...}, ...].
Json to_json(const CurvatureTensor& r);
CurvatureTensor tensor_from_json(const Json& j, std::size_t N);

/// {"n": n, "gram": QMatrix?}; the identity Gram matrix if absent.
std::shared_ptr<const HermitianSpace> space_from_json(const Json& j);

/// {"family": 1..9 | "g1".."g9", "m", "m1", "m2", "k", "h": "full" | "zero" | [QMatrix],
///  "h0": "zero" | "Ri" | "sp1", "phi", "varphi", "psi", "alpha", "Lprime": [[indices]], "U"}.
FamilySpec family_spec_from_json(const Json& j);
Json to_json(const FamilySpec& s);

/// {"C01", "C02", "A0": [3 QMatrix], "S01", "S02", "d": [5], "Rprime": tensor, "P0": [matrices]};
/// every field optional (zero).
Prop1Params params_from_json(const Json& j, std::size_t n);
Json to_json(const Prop1Params& p);

/// "g1".."g9" or "1".."9".
int parse_family(const std::string& text);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string spec_hash(const Json& j);

}  // namespace holonomy::io
