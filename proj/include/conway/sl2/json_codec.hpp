#pragma once

#include "conway/algebra/json_codec.hpp"
#include "conway/sl2/analysis.hpp"

namespace conway::sl2
{

using algebra::Json;
using SeriesMat = Mat2<algebra::Series>;
using SeriesRep = Representation<algebra::Series>;

// Matrices are row-major 4-tuples of coefficients.
Json to_json(const ScalarMat &m);
Json to_json(const SeriesMat &m);
ScalarMat scalar_mat_from_json(const Json &j, double tolerance = algebra::kDefaultTolerance);
SeriesMat series_mat_from_json(const Json &j, int truncation = algebra::kDefaultTruncation,
                               double tolerance = algebra::kDefaultTolerance);

// {"generators": [...], "relators": ["m1 m2 m3 m4", ...],
//  "peripheral": {"meridians": ["m1", ...]}}
Json to_json(const Presentation &p);
Presentation presentation_from_json(const Json &j);

// {"presentation": {...}, "images": {"m1": [a, b, c, d], ...}}
Json to_json(const ScalarRep &rep);
Json to_json(const SeriesRep &rep);
ScalarRep scalar_rep_from_json(const Json &j, double tolerance = algebra::kDefaultTolerance);
SeriesRep series_rep_from_json(const Json &j, int truncation = algebra::kDefaultTruncation,
                               double tolerance = algebra::kDefaultTolerance);

} // namespace conway::sl2
