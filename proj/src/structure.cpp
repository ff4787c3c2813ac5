#include "goodsets/structure.hpp"

#include <algorithm>
#include <set>

#include "goodsets/errors.hpp"
#include "goodsets/loops.hpp"
#include "goodsets/measures.hpp"

namespace goodsets {

namespace {

RationalMatrix incidence_matrix(const PointSet& points, const CoordinateIndex& index) {
  RationalMatrix a(points.size(), index.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (auto c : index.point_columns(p)) a(p, c) = 1;
  }
  return a;
}

void require_nonempty(const PointSet& points, const char* what) {
  if (points.empty()) throw PreconditionError(std::string(what) + " is undefined for the empty set");
}

}  // namespace

IncidenceSystem::IncidenceSystem(PointSet points)
    : points_(std::move(points)),
      index_(points_),
      matrix_(incidence_matrix(points_, index_)),
      rank_(selection_rank(index_, [&] {
        Selection all(points_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
      }())) {}

std::size_t selection_rank(const CoordinateIndex& index, std::span<const std::size_t> selection) {
  IncrementalBasis basis(index.size());
  for (auto p : selection) basis.insert(index.incidence_row(p));
  return basis.size();
}

bool is_independent(const CoordinateIndex& index, std::span<const std::size_t> selection) {
  return selection_rank(index, selection) == selection.size();
}

AnchorSet default_anchors(const PointSet& points) {
  AnchorSet anchors;
  if (points.empty()) return anchors;
  for (std::size_t axis = 0; axis + 1 < points.dimension(); ++axis) {
    const auto least = std::min_element(points.begin(), points.end(), [axis](const Point& a, const Point& b) {
      return a[axis] < b[axis];
    });
    anchors.push_back({axis, (*least)[axis]});
  }
  return anchors;
}

void validate_anchors(const CoordinateIndex& index, const AnchorSet& anchors) {
  const std::size_t n = index.dimension();
  if (anchors.size() + 1 != n) {
    throw PreconditionError("expected " + std::to_string(n - 1) + " anchors, got " +
                            std::to_string(anchors.size()));
  }
  std::set<std::size_t> axes;
  for (const auto& a : anchors) {
    if (a.axis + 1 >= n || !axes.insert(a.axis).second) {
      throw PreconditionError("anchors must name each axis 0.." + std::to_string(n - 2) + " once");
    }
    if (!index.column(a.axis, a.label)) {
      throw PreconditionError("anchor label '" + a.label + "' is not in the projection on axis " +
                              std::to_string(a.axis));
    }
  }
}

StructureReport analyze_structure(const PointSet& points) {
  const IncidenceSystem system(points);
  StructureReport r;
  r.dimension = points.dimension();
  r.size = points.size();
  r.coordinates = system.index().size();
  r.rank = system.rank();
  r.kernel_dim = r.coordinates - r.rank;
  r.excess = r.size - r.rank;
  r.good = r.rank == r.size;
  if (!points.empty()) {
    const std::size_t floor = r.coordinates - (r.dimension - 1);
    r.relatively_full = r.rank == floor;
    r.full = r.good && r.size == floor;
  }
  return r;
}

bool is_good(const PointSet& points) { return analyze_structure(points).good; }

bool is_full(const PointSet& points) {
  require_nonempty(points, "fullness");
  return analyze_structure(points).full;
}

bool is_relatively_full(const PointSet& points) {
  require_nonempty(points, "relative fullness");
  return analyze_structure(points).relatively_full;
}

std::optional<Decomposition> solve_decomposition(const PointSet& points, const PointFunction& f,
                                                 const AnchorSet& anchors) {
  if (f.size() != points.size()) {
    throw PreconditionError("function is not defined on every point of the set");
  }
  const CoordinateIndex index(points);
  if (!points.empty()) validate_anchors(index, anchors);

  const std::size_t rows = points.size() + (points.empty() ? 0 : anchors.size());
  RationalMatrix system(rows, index.size());
  RationalVector rhs(rows);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (auto c : index.point_columns(p)) system(p, c) = 1;
    rhs[p] = f[p];
  }
  if (!points.empty()) {
    for (std::size_t k = 0; k < anchors.size(); ++k) {
      system(points.size() + k, *index.column(anchors[k].axis, anchors[k].label)) = 1;
    }
  }

  const auto solution = solve_linear(system, rhs);
  if (!solution) return std::nullopt;

  Decomposition d;
  d.freedom_dim = index.size() - rank(system);
  d.bundle.axes.resize(points.dimension());
  for (std::size_t c = 0; c < index.size(); ++c) {
    d.bundle.axes[index.axis_of(c)][index.label_of(c)] = (*solution)[c];
  }
  return d;
}

std::optional<Decomposition> solve_decomposition(const PointSet& points, const PointFunction& f) {
  return solve_decomposition(points, f, default_anchors(points));
}

bool is_good_function(const PointSet& points, const PointFunction& f) {
  if (f.size() != points.size()) {
    throw PreconditionError("function is not defined on every point of the set");
  }
  const Selection m = maximal_good_subset(points);
  for (const Measure& mu : uperp_fundamental_basis(points, m)) {
    if (sgn(mu.integrate(f.values)) != 0) return false;
  }
  return true;
}

PointFunction evaluate_bundle(const PointSet& points, const CoordFunctionBundle& bundle) {
  PointFunction f;
  f.values.reserve(points.size());
  for (const auto& p : points) f.values.push_back(bundle.evaluate(p));
  return f;
}

}  // namespace goodsets
