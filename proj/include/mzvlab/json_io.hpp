#pragma once

#include <json.hpp>

#include "mzvlab/hopf.hpp"
#include "mzvlab/qseries.hpp"
#include "mzvlab/words.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

// Rationals are always "num/den" strings; words are arrays of letter names.

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, Alphabet a);

/// {"alphabet": "PY", "terms": [{"coeff": "2/1", "word": ["p", "y"]}, ...]}
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"terms": [{"coeff": ..., "left": [...], "right": [...]}]}
Json tensor_to_json(const Tensor2& t);
Tensor2 tensor_from_json(const Json& j, Alphabet a);

/// {"order": N, "coeffs": ["c0", "c1", ...]}
Json qpoly_to_json(const QPoly& q);
QPoly qpoly_from_json(const Json& j);

Json composition_to_json(const Composition& c);

/// {"value": v, "error_bound": e}
Json float_estimate_to_json(const FloatEstimate& e);

}  // namespace mzv
