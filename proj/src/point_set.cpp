#include "goodsets/point_set.hpp"

#include <algorithm>

#include "goodsets/errors.hpp"

namespace goodsets {

namespace {

std::string describe(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ", ";
    out += p.coords[i];
  }
  return out + ")";
}

}  // namespace

PointSet::PointSet(std::size_t dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ == 0) throw InputError("dimension must be at least 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dimension() != dimension_) {
      throw InputError("point " + std::to_string(i) + " has " +
                       std::to_string(points_[i].dimension()) + " coordinates, expected " +
                       std::to_string(dimension_));
    }
    if (!lookup_.emplace(points_[i], i).second) {
      throw InputError("duplicate point " + describe(points_[i]));
    }
  }
}

std::optional<std::size_t> PointSet::find(const Point& p) const {
  const auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(points_.at(i));
  return PointSet(dimension_, std::move(pts));
}

PointSet PointSet::canonicalized() const {
  std::vector<Point> pts = points_;
  std::sort(pts.begin(), pts.end());
  return PointSet(dimension_, std::move(pts));
}

CoordinateIndex::CoordinateIndex(const PointSet& points)
    : columns_(points.dimension()), projections_(points.dimension()) {
  const std::size_t n = points.dimension();
  point_columns_.reserve(points.size() * n);
  for (const Point& p : points) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      auto [it, fresh] = columns_[axis].emplace(p[axis], axis_of_.size());
      if (fresh) {
        axis_of_.push_back(axis);
        label_of_.push_back(p[axis]);
        projections_[axis].push_back(p[axis]);
      }
      point_columns_.push_back(it->second);
    }
  }
}

std::optional<std::size_t> CoordinateIndex::column(std::size_t axis, const std::string& label) const {
  if (axis >= columns_.size()) return std::nullopt;
  const auto it = columns_[axis].find(label);
  if (it == columns_[axis].end()) return std::nullopt;
  return it->second;
}

std::vector<Integer> CoordinateIndex::incidence_row(std::size_t point) const {
  std::vector<Integer> row(size(), Integer(0));
  for (auto c : point_columns(point)) row[c] = 1;
  return row;
}

std::size_t coordinate_count(const CoordinateIndex& index, std::span<const std::size_t> selection) {
  std::vector<std::size_t> cols;
  cols.reserve(selection.size() * index.dimension());
  for (auto p : selection) {
    for (auto c : index.point_columns(p)) cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  return static_cast<std::size_t>(std::unique(cols.begin(), cols.end()) - cols.begin());
}

Rational CoordFunctionBundle::evaluate(const Point& p) const {
  Rational total = 0;
  for (std::size_t axis = 0; axis < axes.size() && axis < p.dimension(); ++axis) {
    const auto it = axes[axis].find(p[axis]);
    if (it != axes[axis].end()) total += it->second;
  }
  return total;
}

}  // namespace goodsets
