#pragma once

// Goodness, fullness and relative fullness of a finite point set, decided on
// its incidence system: the |S| x N 0/1 matrix A with A[p][c] = 1 iff point p
// carries coordinate c. A function f on S splits as u_1 + ... + u_n exactly
// when f is in the column space of A, so
//
//   good              <=> rows of A independent          (rank = |S|)
//   relatively full   <=> kernel of A has dimension n-1  (rank = N - (n-1))
//   full              <=> good and |S| = N - (n-1)
//
// The kernel always contains the (n-1)-dimensional family of constant shifts
// u_i += c_i with sum c_i = 0, which is why n-1 is the floor.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodsets/linalg.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets {

class IncidenceSystem {
 public:
  explicit IncidenceSystem(PointSet points);

  const PointSet& points() const { return points_; }
  const CoordinateIndex& index() const { return index_; }
  // |S| x N.
  const RationalMatrix& matrix() const { return matrix_; }
  // N x |S|: applied to a measure it yields every one-dimensional marginal.
  RationalMatrix marginal_map() const { return matrix_.transposed(); }
  std::size_t rank() const { return rank_; }

 private:
  PointSet points_;
  CoordinateIndex index_;
  RationalMatrix matrix_;
  std::size_t rank_;
};

// Rank of the incidence rows of the selected points.
std::size_t selection_rank(const CoordinateIndex& index, std::span<const std::size_t> selection);
bool is_independent(const CoordinateIndex& index, std::span<const std::size_t> selection);

struct Anchor {
  std::size_t axis;
  std::string label;
  bool operator==(const Anchor&) const = default;
};

// One anchor per axis 0..n-2; u_axis(label) is pinned to zero.
using AnchorSet = std::vector<Anchor>;

// Lexicographically least label of each axis 0..n-2. Empty for an empty set.
AnchorSet default_anchors(const PointSet& points);
// Throws PreconditionError unless anchors name exactly axes 0..n-2 with
// labels from the projections.
void validate_anchors(const CoordinateIndex& index, const AnchorSet& anchors);

struct StructureReport {
  std::size_t dimension = 0;
  std::size_t size = 0;
  std::size_t coordinates = 0;
  bool good = false;
  bool full = false;
  bool relatively_full = false;
  std::size_t rank = 0;
  // Dimension of the kernel of A acting on coordinate functions: N - rank.
  std::size_t kernel_dim = 0;
  // |S| - rank; the dimension of U(S)^perp.
  std::size_t excess = 0;
};

StructureReport analyze_structure(const PointSet& points);

bool is_good(const PointSet& points);
// Both throw PreconditionError for the empty set.
bool is_full(const PointSet& points);
bool is_relatively_full(const PointSet& points);

struct Decomposition {
  CoordFunctionBundle bundle;
  // Dimension of the anchored solution set; 0 iff the anchored solution is unique.
  std::size_t freedom_dim = 0;
};

// A bundle u with sum_i u_i(x_i) = f(x) on S and u_i(anchor_i) = 0, chosen
// with every free variable at zero; nullopt iff f is not in U(S).
// Throws PreconditionError when f does not match S or an anchor is invalid.
std::optional<Decomposition> solve_decomposition(const PointSet& points, const PointFunction& f,
                                                 const AnchorSet& anchors);
std::optional<Decomposition> solve_decomposition(const PointSet& points, const PointFunction& f);

// f in U(S), decided by evaluating every fundamental loop measure on f.
bool is_good_function(const PointSet& points, const PointFunction& f);

// f(x) = sum_i u_i(x_i) for every point.
PointFunction evaluate_bundle(const PointSet& points, const CoordFunctionBundle& bundle);

}  // namespace goodsets
