#pragma once

#include <string>

#include "json.hpp"
#include "vertexlab/gv.hpp"
#include "vertexlab/multiclass.hpp"
#include "vertexlab/qseries.hpp"

namespace vertexlab {

using Json = nlohmann::ordered_json;

/// {"terms": [[doubled_exponent, "num/den"], ...], "window": [lo, hi|null]}
/// hi serializes as null for exact series; rationals are canonical strings.
Json series_to_json(const HalfLaurentSeries& s);
HalfLaurentSeries series_from_json(const Json& j);

/// {"weights": [...], "cutoff": D, "constant": "c",
///  "classes": [{"class": [...], "terms": ..., "window": ...}, ...]}
Json multiclass_to_json(const MultiClassSeries& z);
MultiClassSeries multiclass_from_json(const Json& j);

/// {"weights": [...], "cutoff": D, "entries": [[g, [beta...], "n"], ...]}
Json gv_table_to_json(const GVTable& t);
GVTable gv_table_from_json(const Json& j);

/// {"classes": [{"class": [...], "coeffs": [[n, "c"], ...]}, ...]}
Json truncation_to_json(const TruncationData& d);
TruncationData truncation_from_json(const Json& j);

} // namespace vertexlab
