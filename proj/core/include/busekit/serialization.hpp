#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "busekit/checks.hpp"
#include "busekit/decomposition.hpp"
#include "busekit/induced.hpp"
#include "busekit/isometry.hpp"

namespace busekit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Point& x);
Json to_json(const SpaceDescriptor& space);
Json to_json(const GeodesicLine& line);
Json to_json(const CheckReport& report);
Json to_json(const IsometryClass& c);
Json to_json(const InducedReport& r);

/// One CSV row per report and per nested part: property,pass,violation,seed.
std::string csv_header_for_reports();
std::string to_csv_rows(const CheckReport& report);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string format_double(double v);

// Parsers for the scene schema. Unknown keys throw parse_error; invalid
// values throw the matching domain error.
SpaceDescriptor parse_space(const Json& j, Tolerances tol = {});
Point parse_point(const Json& j);
IdealPoint parse_ideal(const Json& j);
DirectionSpec parse_direction(const Json& j, const SpaceDescriptor& space);
GeodesicLine parse_line(const Json& j, const SpaceDescriptor& space);
IsometrySpec parse_isometry(const Json& j);

/// Throws parse_error naming the first key of j outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace busekit
