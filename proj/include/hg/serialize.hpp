#ifndef HG_SERIALIZE_HPP
#define HG_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "hg/heights.hpp"
#include "hg/local.hpp"

namespace hg {

using Json = nlohmann::json;

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& q);

// {"min_poly": ["-1","-1","1"]} (coefficients of the monic minimal polynomial,
// constant term first; decimal strings or numbers)
FieldPtr field_from_json(const Json& j);
Json field_to_json(const FieldPtr& K);

// scalar for rational values, else the coefficient list [["num","den"], ...]
FieldElement element_from_json(const FieldPtr& K, const Json& j);
Json element_to_json(const FieldElement& x);

// {"field": {...}, "d": n, "mats": [[[...]]], "sl": true}
MatrixSet matrix_set_from_json(const Json& j);
Json matrix_set_to_json(const MatrixSet& F);

// file loader; malformed input raises Error(Usage)
MatrixSet load_matrix_set(const std::string& path);

Json logbounds_to_json(const LogBounds& b);
Json height_report_to_json(const HeightReport& r);

}  // namespace hg

#endif
