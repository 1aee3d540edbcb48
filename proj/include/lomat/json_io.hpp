#pragma once

#include <json.hpp>

#include <string>

#include "lomat/algebra.hpp"
#include "lomat/invariants.hpp"
#include "lomat/linmap.hpp"

namespace lomat {

/*
 * Wire formats (nlohmann::json keeps object keys sorted, so dumps are
 * byte-stable):
 *   scalar   "p/q" over Q, {"im":"r/s","re":"p/q"} over Qi
 *   matrix   {"field":"Q"|"Qi","rows":[[scalar,...],...]}
 *   tower    {"cycle":[...],"n1":...,"prefix":[...]}
 *   element  {"matrix":...,"stage":i,"tower":...}
 *   map      {"coeffs":<m^2 x n^2 matrix>,"field":...,"m":...,"n":...}
 *   radical  {"n":k,"v":"p/q"}
 * Parsers throw Error(parse_error) on malformed input.
 */

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, Field f);

nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json tower_to_json(const TowerDescriptor& d);
TowerDescriptor tower_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const MatLinearMap& m);
MatLinearMap map_from_json(const nlohmann::json& j);

nlohmann::json radical_to_json(const RadicalValue& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace lomat
