#pragma once

// Finite subsets of an n-fold product X_1 x ... x X_n with opaque string
// labels on every axis.
//
// The canonical order of a PointSet is the order its points were supplied
// in. All deterministic tie-breaking in the library (greedy scans, loop
// orientation, partition order) refers to that order. canonicalized() gives
// the lexicographically sorted copy used for document comparison.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodsets/rational.hpp"

namespace goodsets {

struct Point {
  std::vector<std::string> coords;

  std::size_t dimension() const { return coords.size(); }
  const std::string& operator[](std::size_t axis) const { return coords[axis]; }

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;
};

// Indices into a PointSet, ascending unless stated otherwise.
using Selection = std::vector<std::size_t>;

class PointSet {
 public:
  PointSet() = default;
  // Throws InputError on dimension 0, wrong tuple length, or a duplicate.
  PointSet(std::size_t dimension, std::vector<Point> points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<std::size_t> find(const Point& p) const;
  bool contains(const Point& p) const { return find(p).has_value(); }

  // Points at the given indices, in the given order.
  PointSet subset(std::span<const std::size_t> indices) const;
  PointSet canonicalized() const;

  bool operator==(const PointSet& other) const {
    return dimension_ == other.dimension_ && points_ == other.points_;
  }

 private:
  std::size_t dimension_ = 1;
  std::vector<Point> points_;
  std::map<Point, std::size_t> lookup_;
};

// Column numbering of the coordinates (axis, label) that occur in a PointSet.
class CoordinateIndex {
 public:
  explicit CoordinateIndex(const PointSet& points);

  // N(S): total number of distinct coordinates over all axes.
  std::size_t size() const { return axis_of_.size(); }
  std::size_t dimension() const { return projections_.size(); }

  std::optional<std::size_t> column(std::size_t axis, const std::string& label) const;
  std::size_t axis_of(std::size_t column) const { return axis_of_[column]; }
  const std::string& label_of(std::size_t column) const { return label_of_[column]; }

  // Pi_i S in first-appearance order.
  const std::vector<std::string>& projection(std::size_t axis) const { return projections_[axis]; }

  // The n columns carried by a point, one per axis.
  std::span<const std::size_t> point_columns(std::size_t point) const {
    return {point_columns_.data() + point * dimension(), dimension()};
  }

  // Row of the 0/1 incidence matrix for a point.
  std::vector<Integer> incidence_row(std::size_t point) const;

 private:
  std::vector<std::map<std::string, std::size_t>> columns_;
  std::vector<std::vector<std::string>> projections_;
  std::vector<std::size_t> axis_of_;
  std::vector<std::string> label_of_;
  std::vector<std::size_t> point_columns_;
};

inline CoordinateIndex build_index(const PointSet& points) { return CoordinateIndex(points); }

// Number of distinct coordinates of the selected points.
std::size_t coordinate_count(const CoordinateIndex& index, std::span<const std::size_t> selection);

// A rational value per point, aligned with a PointSet.
struct PointFunction {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
  bool operator==(const PointFunction&) const = default;
};

// One function per axis, u_i : Pi_i S -> Q.
struct CoordFunctionBundle {
  std::vector<std::map<std::string, Rational>> axes;

  // sum_i u_i(p_i); labels missing from an axis contribute 0.
  Rational evaluate(const Point& p) const;
  bool operator==(const CoordFunctionBundle&) const = default;
};

}  // namespace goodsets
