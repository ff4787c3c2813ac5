#pragma once

// JSON documents produced by the command-line tool. Every builder is a pure
// function of its inputs, so documents are byte-stable across runs (timing is
// only included on request).

#include <cstddef>
#include <vector>

#include "goodsets/components.hpp"
#include "goodsets/io.hpp"
#include "goodsets/loops.hpp"
#include "goodsets/measure.hpp"
#include "goodsets/structure.hpp"

namespace goodsets {

inline constexpr std::size_t kDefaultLoopCap = 10000;

struct ReportOptions {
  ComponentOptions components;
  std::size_t loop_cap = kDefaultLoopCap;
  bool skip_extreme = false;
  bool timing = false;
};

Json to_json(const PointSet& points, const LoopCert& loop);
Json to_json(const PointSet& points, const Partition& partition);
Json to_json(const PointSet& points, const Measure& mu);
Json to_json(const PointSet& points, const Selection& selection);
Json to_json(const StructureReport& report);

// Values may omit points, which then carry mass 0.
Measure measure_from_json(const Json& doc, const PointSet& points);

// A function document read as (M, g): the points it lists, in document order,
// and their values. Throws InputError for points outside the set.
std::pair<Selection, PointFunction> subset_function_from_json(const Json& doc, const PointSet& points);

// Throws CapExceeded when a bounded section cannot run and the heuristic
// fallback is not permitted; with the fallback such sections are null and
// listed under "omitted".
Json analyze_document(const PointSet& points, const ReportOptions& options);

Json loops_document(const PointSet& points, std::size_t cap);
Json components_document(const PointSet& points, const ComponentOptions& options);
// Throws PreconditionError if the set is not good.
Json quotient_document(const PointSet& points, const ComponentOptions& options);
Json extreme_document(const PointSet& points);

struct SolveOutcome {
  bool feasible = false;
  Json document;
};
// Infeasible outcomes carry a fundamental loop measure with mu(f) != 0.
SolveOutcome solve_document(const PointSet& points, const PointFunction& f, const AnchorSet& anchors);

// g is given on the points of a maximal good subset m.
Json extend_document(const PointSet& points, const Selection& m, const PointFunction& g);

// Throws PreconditionError when the marginals of mu do not vanish.
Json decompose_document(const PointSet& points, const Measure& mu);

}  // namespace goodsets
