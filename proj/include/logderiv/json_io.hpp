#pragma once

#include <string>

#include <json.hpp>

#include "logderiv/adaptive.hpp"
#include "logderiv/certificate.hpp"
#include "logderiv/explorer.hpp"
#include "logderiv/intervals.hpp"
#include "logderiv/poles.hpp"
#include "logderiv/polynorm.hpp"
#include "logderiv/quadrature.hpp"

namespace logderiv {

using Json = nlohmann::json;

/// {"n": <int>, "angles": [<float>...]}; angles are normalized with the
/// file snap tolerance and their count must equal n. Throws ParseError.
[[nodiscard]] PoleSet pole_set_from_json(const Json& doc);
[[nodiscard]] Json to_json(const PoleSet& poles);

/// {"leading": [re, im], "zeros": [[re, im]...]}; "leading" defaults to [1, 0].
[[nodiscard]] DiskPolynomial disk_polynomial_from_json(const Json& doc);
[[nodiscard]] Json to_json(const DiskPolynomial& p);

/// {"intervals": [[a, b]...], "measure": m}
[[nodiscard]] Json to_json(const IntervalUnion& u);
[[nodiscard]] IntervalUnion interval_union_from_json(const Json& doc);

[[nodiscard]] Json to_json(const QuadratureResult& r);
[[nodiscard]] Json to_json(const Theorem1Report& r);
[[nodiscard]] Json to_json(const Certificate& c);
[[nodiscard]] Certificate certificate_from_json(const Json& doc);
[[nodiscard]] Json to_json(const StudyRecord& r);

/// Parses text into JSON, rethrowing syntax errors as ParseError.
[[nodiscard]] Json parse_json(const std::string& text);

/// Short stable hex digest of the angle list (FNV-1a over the bytes).
[[nodiscard]] std::string poles_hash(const PoleSet& poles);

}  // namespace logderiv
