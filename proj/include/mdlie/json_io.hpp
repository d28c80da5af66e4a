#pragma once

#include "mdlie/invariants.hpp"
#include "mdlie/kirillov.hpp"
#include "mdlie/lie_algebra.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mdlie {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in 64 bits, everything else a
/// "p/q" string. Both forms are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path = "");

Json to_json(std::span<const Rational> v);
Json to_json(const MatrixQ& m);
VectorQ vector_from_json(const Json& j, const std::string& path = "");

/// {"dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": q}}]}, 1-based.
Json to_json(const LieAlgebra& g);
/// Throws InputError naming the JSON pointer of the offending value.
LieAlgebra algebra_from_json(const Json& j);
/// Parses text first; syntax errors are reported as "<source>:line:col: ...".
LieAlgebra parse_algebra(std::string_view text, const std::string& source = "<input>");
LieAlgebra load_algebra(const std::string& path);

/// {"verdict", "max_dim", "proof", "witnesses": [{"F", "rank"}], "histogram"}.
Json to_json(const MDVerdict& v, const RankProfile* profile = nullptr);
Json to_json(const Fingerprint& fp);
Json to_json(const SeparationReport& r);
Json to_json(const IsoResult& r);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace mdlie
