#include "goodsets/report.hpp"

#include <chrono>

#include "goodsets/errors.hpp"
#include "goodsets/measures.hpp"

namespace goodsets {

namespace {

Json points_json(const PointSet& points, std::span<const std::size_t> selection) {
  Json out = Json::array();
  for (auto p : selection) out.push_back(to_json(points[p]));
  return out;
}

Json anchors_json(const AnchorSet& anchors) {
  Json out = Json::array();
  for (const auto& a : anchors) out.push_back(Json{{"axis", a.axis}, {"label", a.label}});
  return out;
}

}  // namespace

Json to_json(const PointSet& points, const LoopCert& loop) {
  Json coeffs = Json::array();
  for (const auto& c : loop.coeffs) coeffs.push_back(to_string(c));
  Json out;
  out["points"] = points_json(points, loop.points);
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const PointSet& points, const Partition& partition) {
  Json parts = Json::array();
  for (const auto& part : partition.parts) parts.push_back(points_json(points, part));
  Json out;
  out["kind"] = to_string(partition.kind);
  out["method"] = to_string(partition.method);
  out["parts"] = std::move(parts);
  return out;
}

Json to_json(const PointSet& points, const Measure& mu) { return function_to_json(points, mu.values()); }

Json to_json(const PointSet& points, const Selection& selection) { return points_json(points, selection); }

Json to_json(const StructureReport& r) {
  Json out;
  out["n"] = r.dimension;
  out["size"] = r.size;
  out["coordinates"] = r.coordinates;
  out["good"] = r.good;
  out["full"] = r.full;
  out["relatively_full"] = r.relatively_full;
  out["rank"] = r.rank;
  out["kernel_dim"] = r.kernel_dim;
  out["excess"] = r.excess;
  return out;
}

Measure measure_from_json(const Json& doc, const PointSet& points) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw InputError("measure document needs an array field 'values'");
  }
  RationalVector values(points.size());
  std::vector<bool> seen(points.size(), false);
  for (const auto& entry : doc["values"]) {
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("value")) {
      throw InputError("each measure entry needs 'point' and 'value'");
    }
    const auto idx = points.find(point_from_json(entry["point"], points.dimension()));
    if (!idx) throw InputError("measure entry for a point outside the set");
    if (seen[*idx]) throw InputError("measure assigns a point twice");
    seen[*idx] = true;
    values[*idx] = rational_from_json(entry["value"]);
  }
  return Measure(std::move(values));
}

std::pair<Selection, PointFunction> subset_function_from_json(const Json& doc, const PointSet& points) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw InputError("function document needs an array field 'values'");
  }
  Selection m;
  PointFunction g;
  std::vector<bool> seen(points.size(), false);
  for (const auto& entry : doc["values"]) {
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("value")) {
      throw InputError("each function entry needs 'point' and 'value'");
    }
    const auto idx = points.find(point_from_json(entry["point"], points.dimension()));
    if (!idx) throw InputError("function entry for a point outside the set");
    if (seen[*idx]) throw InputError("function assigns a point twice");
    seen[*idx] = true;
    m.push_back(*idx);
    g.values.push_back(rational_from_json(entry["value"]));
  }
  return {std::move(m), std::move(g)};
}

Json analyze_document(const PointSet& points, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool fallback = options.components.heuristic_fallback;
  Json omitted = Json::array();

  const StructureReport structure = analyze_structure(points);
  Json out;
  out["tool_version"] = GOODSETS_VERSION;
  out["structure"] = to_json(structure);

  Json partitions;
  partitions["related"] = structure.good ? to_json(points, related_components(points, options.components)) : Json();
  partitions["relatively_full"] = to_json(points, relatively_full_components(points, options.components));
  out["partitions"] = std::move(partitions);

  try {
    const auto loops = enumerate_loops(points, options.loop_cap);
    Json list = Json::array();
    for (const auto& loop : loops) list.push_back(to_json(points, loop));
    out["loop_count"] = loops.size();
    out["loops"] = std::move(list);
  } catch (const CapExceeded& e) {
    if (!fallback) throw;
    out["loop_count"] = Json();
    out["loops"] = Json();
    omitted.push_back(Json{{"section", "loops"}, {"reason", e.what()}});
  }

  const Selection m = maximal_good_subset(points);
  out["maximal_good_subset"] = to_json(points, m);

  Json basis = Json::array();
  for (const auto& mu : uperp_fundamental_basis(points, m)) basis.push_back(to_json(points, mu));
  out["uperp"] = Json{{"dimension", structure.excess}, {"basis", std::move(basis)}};

  if (options.skip_extreme) {
    out["extreme_points"] = Json();
    omitted.push_back(Json{{"section", "extreme_points"}, {"reason", "skipped on request"}});
  } else {
    try {
      Json list = Json::array();
      for (const auto& mu : enumerate_extreme_points(points)) list.push_back(to_json(points, mu));
      out["extreme_points"] = std::move(list);
    } catch (const CapExceeded& e) {
      if (!fallback) throw;
      out["extreme_points"] = Json();
      omitted.push_back(Json{{"section", "extreme_points"}, {"reason", e.what()}});
    }
  }
  out["omitted"] = std::move(omitted);

  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return out;
}

Json loops_document(const PointSet& points, std::size_t cap) {
  Json list = Json::array();
  const auto loops = enumerate_loops(points, cap);
  for (const auto& loop : loops) list.push_back(to_json(points, loop));
  Json out;
  out["count"] = loops.size();
  out["loops"] = std::move(list);
  return out;
}

Json components_document(const PointSet& points, const ComponentOptions& options) {
  Json out;
  out["good"] = is_good(points);
  out["related"] = out["good"].get<bool>() ? to_json(points, related_components(points, options)) : Json();
  out["relatively_full"] = to_json(points, relatively_full_components(points, options));
  return out;
}

Json quotient_document(const PointSet& points, const ComponentOptions& options) {
  const QuotientModel q = quotient(points, options);
  Json classes = Json::array();
  for (const auto& axis : q.classes) {
    Json c = Json::object();
    for (const auto& [label, id] : axis) c[label] = id;
    classes.push_back(std::move(c));
  }
  Json out;
  out["components"] = to_json(points, q.components);
  out["cross_section"] = to_json(points, q.cross_section);
  out["classes"] = std::move(classes);
  out["image"] = to_json(q.image);
  out["image_good"] = is_good(q.image);
  out["image_full"] = !q.image.empty() && is_full(q.image);
  out["full"] = !points.empty() && is_full(points);
  return out;
}

Json extreme_document(const PointSet& points) {
  Json list = Json::array();
  const auto extreme = enumerate_extreme_points(points);
  for (const auto& mu : extreme) list.push_back(to_json(points, mu));
  Json out;
  out["uperp_dimension"] = uperp_dimension(points);
  out["count"] = extreme.size();
  out["extreme_points"] = std::move(list);
  return out;
}

SolveOutcome solve_document(const PointSet& points, const PointFunction& f, const AnchorSet& anchors) {
  SolveOutcome outcome;
  const auto solution = solve_decomposition(points, f, anchors);
  Json& out = outcome.document;
  out["anchors"] = anchors_json(anchors);
  if (solution) {
    outcome.feasible = true;
    out["feasible"] = true;
    out["freedom_dim"] = solution->freedom_dim;
    out["bundle"] = to_json(solution->bundle);
    return outcome;
  }
  out["feasible"] = false;
  const Selection m = maximal_good_subset(points);
  std::vector<bool> in_m(points.size(), false);
  for (auto i : m) in_m[i] = true;
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (in_m[x]) continue;
    const LoopCert loop = fundamental_loop(points, m, x);
    const Measure mu = loop_measure(points, loop);
    const Rational value = mu.integrate(f.values);
    if (sgn(value) != 0) {
      out["violated"] = Json{{"loop", to_json(points, loop)}, {"measure", to_json(points, mu)}, {"value", to_string(value)}};
      break;
    }
  }
  return outcome;
}

Json extend_document(const PointSet& points, const Selection& m, const PointFunction& g) {
  const PointFunction f = extend_from_maximal_good(points, m, g);
  Json out;
  out["maximal_good_subset"] = to_json(points, m);
  out["function"] = function_to_json(points, f.values);
  return out;
}

Json decompose_document(const PointSet& points, const Measure& mu) {
  const ConformalDecomposition d = decompose_weak_loop(points, mu.values());
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    terms.push_back(Json{{"loop", to_json(points, t.loop)},
                         {"orientation", t.orientation},
                         {"scale", to_string(t.scale)},
                         {"l1", to_string(t.l1())}});
  }
  Json out;
  out["terms"] = std::move(terms);
  out["pivots"] = d.pivots;
  out["l1_input"] = to_string(mu.norm());
  out["l1_terms"] = to_string(d.l1());
  return out;
}

}  // namespace goodsets
