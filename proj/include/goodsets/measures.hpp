#pragma once

// Marginal-free measures. U(S)^perp is the set of signed measures whose
// one-dimensional marginals all vanish; A is its intersection with the unit
// l1 ball. The extreme points of A are exactly the normalized loop measures
// +-mu_L; enumerate_extreme_points computes them without using loops at all,
// which is what lets the two be checked against each other.

#include <cstddef>
#include <span>
#include <vector>

#include "goodsets/loops.hpp"
#include "goodsets/measure.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets {

// mu_L(x_j) = n_j / sum_i |n_i| on the loop, 0 elsewhere. Throws
// PreconditionError when the cert does not validate against the set.
Measure loop_measure(const PointSet& points, const LoopCert& cert);

// All N marginals of mu, indexed by coordinate column.
RationalVector marginals(const CoordinateIndex& index, std::span<const Rational> mu);

bool in_uperp(const PointSet& points, const Measure& mu);

// |S| - rank(A).
std::size_t uperp_dimension(const PointSet& points);

inline constexpr std::size_t kDefaultPolytopeBound = 10;

// Extreme points of A by vertex enumeration of the lifted polytope
//   { (p, q, t) >= 0 : B p - B q = 0, 1'p + 1'q + t = 1 },  mu = p - q.
// Output: {0} when U(S)^perp = {0}; otherwise pairs +mu, -mu with the
// positive-leading member first, pairs sorted lexicographically.
// Throws CapExceeded when |S| > bound.
std::vector<Measure> enumerate_extreme_points(const PointSet& points,
                                              std::size_t bound = kDefaultPolytopeBound);

// {+-mu_L : L a loop of S} in the same order as enumerate_extreme_points.
std::vector<Measure> loop_extreme_points(const PointSet& points, std::size_t cap,
                                         std::size_t bound = kDefaultLoopBound);

// Throws PreconditionError unless mu lies in A.
bool is_extreme(const PointSet& points, const Measure& mu);

// Canonical listing used by both enumerations.
std::vector<Measure> canonical_signed_pairs(std::vector<Measure> measures);

}  // namespace goodsets
