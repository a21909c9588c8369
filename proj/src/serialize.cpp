#include "hg/serialize.hpp"

#include <fstream>

#include "hg/error.hpp"

namespace hg {

Rat rat_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rat((long)j.get<int64_t>());
    if (j.is_string()) {
      Rat r(j.get<std::string>());
      r.canonicalize();
      return r;
    }
    if (j.is_array() && j.size() == 2) {
      Rat num = rat_from_json(j[0]), den = rat_from_json(j[1]);
      if (den == 0) throw Error(ErrorCode::Usage, "zero denominator");
      Rat r = num / den;
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Usage, "malformed rational: " + j.dump());
  }
  throw Error(ErrorCode::Usage, "malformed rational: " + j.dump());
}

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return Json(q.get_num().get_str());
  return Json(q.get_str());
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("min_poly") || !j["min_poly"].is_array())
    throw Error(ErrorCode::Usage, "field needs a min_poly array");
  ZPoly f;
  for (auto& c : j["min_poly"]) {
    Rat r = rat_from_json(c);
    if (r.get_den() != 1) throw Error(ErrorCode::Usage, "min_poly must be integral");
    f.push_back(r.get_num());
  }
  return NumberField::create(f);
}

Json field_to_json(const FieldPtr& K) {
  Json coeffs = Json::array();
  for (auto& c : K->min_poly()) coeffs.push_back(c.get_str());
  return Json{{"min_poly", coeffs}};
}

FieldElement element_from_json(const FieldPtr& K, const Json& j) {
  // scalars ("3", "3/4", 5) are rationals; arrays are coefficient vectors of
  // length [K:Q] in the power basis (entries rational scalars or num/den pairs)
  if (j.is_array()) {
    if ((int)j.size() != K->degree())
      throw Error(ErrorCode::Usage, "coefficient vector length must equal the field degree");
    std::vector<Rat> c;
    for (auto& e : j) c.push_back(rat_from_json(e));
    return FieldElement(K, std::move(c));
  }
  return FieldElement::from_rational(K, rat_from_json(j));
}

Json element_to_json(const FieldElement& x) {
  if (x.is_rational()) return rat_to_json(x.is_zero() ? Rat(0) : x.rational_value());
  Json out = Json::array();
  for (auto& c : x.coeffs()) out.push_back(rat_to_json(c));
  return out;
}

MatrixSet matrix_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("d") || !j.contains("mats"))
    throw Error(ErrorCode::Usage, "matrix set needs field, d, mats");
  MatrixSet F;
  F.field = field_from_json(j["field"]);
  F.d = j["d"].get<int>();
  F.sl = j.value("sl", true);
  if (!j["mats"].is_array() || j["mats"].empty())
    throw Error(ErrorCode::Usage, "mats must be a nonempty array");
  for (auto& jm : j["mats"]) {
    if (!jm.is_array() || (int)jm.size() != F.d)
      throw Error(ErrorCode::Usage, "matrix row count mismatch");
    KMatrix m(F.field, F.d);
    for (int i = 0; i < F.d; ++i) {
      if (!jm[i].is_array() || (int)jm[i].size() != F.d)
        throw Error(ErrorCode::Usage, "matrix column count mismatch");
      for (int k = 0; k < F.d; ++k) m.at(i, k) = element_from_json(F.field, jm[i][k]);
    }
    F.mats.push_back(std::move(m));
  }
  F.validate();
  return F;
}

Json matrix_set_to_json(const MatrixSet& F) {
  Json mats = Json::array();
  for (auto& m : F.mats) {
    Json rows = Json::array();
    for (int i = 0; i < F.d; ++i) {
      Json row = Json::array();
      for (int k = 0; k < F.d; ++k) row.push_back(element_to_json(m.at(i, k)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return Json{{"field", field_to_json(F.field)}, {"d", F.d}, {"mats", mats}, {"sl", F.sl}};
}

MatrixSet load_matrix_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Usage, "cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Usage, std::string("JSON parse error: ") + e.what());
  }
  return matrix_set_from_json(j);
}

Json logbounds_to_json(const LogBounds& b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}};
}

Json height_report_to_json(const HeightReport& r) {
  Json rows = Json::array();
  for (auto& row : r.rows)
    rows.push_back(Json{{"place", row.place_id},
                        {"n_v", row.n_v},
                        {"lower", row.lower},
                        {"upper", row.upper},
                        {"exact", row.exact}});
  return Json{{"total", logbounds_to_json(r.total)},
              {"finite_part", logbounds_to_json(r.finite_part)},
              {"infinite_part", logbounds_to_json(r.infinite_part)},
              {"degree_normalizer", r.degree_normalizer},
              {"places", rows}};
}

}  // namespace hg
