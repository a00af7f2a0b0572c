#pragma once

#include <json.hpp>

#include "conway/algebra/multipoly.hpp"
#include "conway/algebra/scalar.hpp"
#include "conway/algebra/series.hpp"

namespace conway::algebra
{

using Json = nlohmann::json;

// {"re": "1/2", "im": "0", "kind": "rat"} or kind "f64" with decimal strings.
Json to_json(const Scalar &s);
// Also accepts a bare number or a rational/decimal string (read exactly).
Scalar scalar_from_json(const Json &j, double tolerance = kDefaultTolerance);

// {"vars": [...], "terms": [{"exps": [...], "coeff": ...}]}
Json to_json(const MultiPoly &p);
MultiPoly poly_from_json(const Json &j, double tolerance = kDefaultTolerance);

// {"ram": e, "terms": [{"ord": n, "coeff": ...}], "order": n}; "order" is
// omitted for exact series.
Json to_json(const Series &s);
Series series_from_json(const Json &j, int truncation = kDefaultTruncation, double tolerance = kDefaultTolerance);

} // namespace conway::algebra
