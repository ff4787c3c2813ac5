#pragma once

// JSON documents.
//
//   point set:  {"n": 2, "points": [["a", "x"], ["b", "x"]]}
//   function:   {"values": [{"point": ["a", "x"], "value": "1/2"}, ...]}
//
// Rationals travel as strings ("p/q" or "p"); plain JSON integers are
// accepted on input.

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "goodsets/point_set.hpp"

namespace goodsets {

using Json = nlohmann::ordered_json;

// Throw InputError on any schema violation.
PointSet parse_point_set(std::string_view text);
PointSet point_set_from_json(const Json& doc);
Json to_json(const PointSet& points);
std::string serialize_point_set(const PointSet& points);

Json to_json(const Point& p);
Point point_from_json(const Json& doc, std::size_t dimension);

Rational rational_from_json(const Json& value);
inline Json to_json(const Rational& value) { return to_string(value); }

// Values must cover every point of `points` exactly once.
PointFunction parse_function(std::string_view text, const PointSet& points);
PointFunction function_from_json(const Json& doc, const PointSet& points);
Json function_to_json(const PointSet& points, std::span<const Rational> values);

Json to_json(const CoordFunctionBundle& bundle);

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace goodsets
