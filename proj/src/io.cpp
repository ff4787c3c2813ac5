#include "goodsets/io.hpp"

#include <fstream>
#include <sstream>

#include "goodsets/errors.hpp"

namespace goodsets {

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Point point_from_json(const Json& doc, std::size_t dimension) {
  if (!doc.is_array()) throw InputError("a point must be an array of labels");
  Point p;
  for (const auto& label : doc) {
    if (!label.is_string()) throw InputError("coordinate labels must be strings");
    p.coords.push_back(label.get<std::string>());
  }
  if (p.dimension() != dimension) {
    throw InputError("point has " + std::to_string(p.dimension()) + " coordinates, expected " +
                     std::to_string(dimension));
  }
  return p;
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& label : p.coords) out.push_back(label);
  return out;
}

PointSet point_set_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("point set document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("point set document needs an integer field 'n'");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1) throw InputError("'n' must be at least 1");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw InputError("point set document needs an array field 'points'");
  }
  std::vector<Point> pts;
  for (const auto& p : doc["points"]) pts.push_back(point_from_json(p, static_cast<std::size_t>(n)));
  return PointSet(static_cast<std::size_t>(n), std::move(pts));
}

PointSet parse_point_set(std::string_view text) { return point_set_from_json(parse_document(text)); }

Json to_json(const PointSet& points) {
  Json out;
  out["n"] = points.dimension();
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(to_json(p));
  out["points"] = std::move(pts);
  return out;
}

std::string serialize_point_set(const PointSet& points) { return to_json(points).dump(); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw InputError("rational values must be strings \"p/q\" or integers");
}

PointFunction function_from_json(const Json& doc, const PointSet& points) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw InputError("function document needs an array field 'values'");
  }
  std::vector<std::optional<Rational>> seen(points.size());
  for (const auto& entry : doc["values"]) {
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("value")) {
      throw InputError("each function entry needs 'point' and 'value'");
    }
    const Point p = point_from_json(entry["point"], points.dimension());
    const auto idx = points.find(p);
    if (!idx) throw InputError("function entry for a point outside the set");
    if (seen[*idx]) throw InputError("function assigns a point twice");
    seen[*idx] = rational_from_json(entry["value"]);
  }
  PointFunction f;
  f.values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen[i]) throw InputError("function is not defined on point " + std::to_string(i));
    f.values.push_back(*seen[i]);
  }
  return f;
}

PointFunction parse_function(std::string_view text, const PointSet& points) {
  return function_from_json(parse_document(text), points);
}

Json function_to_json(const PointSet& points, std::span<const Rational> values) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    Json e;
    e["point"] = to_json(points[i]);
    e["value"] = to_string(values[i]);
    entries.push_back(std::move(e));
  }
  Json out;
  out["values"] = std::move(entries);
  return out;
}

Json to_json(const CoordFunctionBundle& bundle) {
  Json axes = Json::array();
  for (const auto& axis : bundle.axes) {
    Json values = Json::object();
    for (const auto& [label, value] : axis) values[label] = to_string(value);
    axes.push_back(std::move(values));
  }
  return axes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace goodsets
