#pragma once

#include "multconv/oracle.hpp"
#include "multconv/universality.hpp"
#include "multconv/zonoid.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace multconv {

/* JSON forms used by the CLI. Rationals are "p/q" strings, subsets are sorted
 * 1-based index arrays, and a surd is [[coefficient, radicand], ...] sorted by
 * radicand. Every parser throws ErrorKind::Parse on malformed input. */

using Json = nlohmann::ordered_json;

Json to_json(const Surd& a);
Surd surd_from_json(const Json& j);

Json to_json(const SubsetMask& e);
SubsetMask subset_from_json(const Json& j, int n);
Json to_json(const Family& f);
Family family_from_json(const Json& j, int n);

Json to_json(const GeneratingPair& p);
GeneratingPair pair_from_json(const Json& j);

Json to_json(const Point& x);
Point point_from_json(const Json& j);
Json to_json(const Ray& r);
Ray ray_from_json(const Json& j);

Json to_json(const Measure& mu);
Measure measure_from_json(const Json& j);
Json to_json(const SphereMeasure& mu);
SphereMeasure sphere_measure_from_json(const Json& j);

Json to_json(const Zonotope& z);
Zonotope zonotope_from_json(const Json& j);

/// Adds "dim" and "space" ("rn" or "sphere") so the report parses back on its own.
Json to_json(const UniversalityReport& r, int n, bool sphere);
UniversalityReport report_from_json(const Json& j);

Json to_json(const SuiteReport& r);

/// Parses text, mapping syntax errors to ErrorKind::Parse.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace multconv
