#pragma once

// Loops are the circuits of the incidence matroid: minimal sets of points
// whose incidence rows are dependent. Every loop carries a unique (up to
// sign) primitive integer vector n with sum_j n_j x_j = 0 coordinate-wise,
// and every rational dependency on the loop is a multiple of it.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "goodsets/linalg.hpp"
#include "goodsets/measure.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets {

// A loop of an ambient PointSet: points[j] is an index into that set and
// carries coefficient coeffs[j]. The coefficient vector is primitive and its
// first entry is positive.
struct LoopCert {
  Selection points;
  IntegerVector coeffs;

  std::size_t size() const { return points.size(); }
  // The same loop with points in ascending order and the sign fixed so the
  // first coefficient is positive.
  LoopCert canonical() const;
  bool operator==(const LoopCert&) const = default;
};

enum class LoopDefect { none, independent, not_minimal };

LoopDefect classify_loop(const PointSet& ambient, std::span<const std::size_t> support);

struct LoopValidation {
  bool distinct_points = false;
  bool nonzero = false;
  bool primitive = false;
  bool sign_normalized = false;
  bool vanishing = false;
  bool minimal = false;             // every proper subset is independent
  std::size_t support_kernel_dim = 0;  // must be 1

  bool ok() const {
    return distinct_points && nonzero && primitive && sign_normalized && vanishing && minimal &&
           support_kernel_dim == 1;
  }
};

LoopValidation validate_loop(const PointSet& ambient, const LoopCert& cert);

// First loop met by scanning points in canonical order and keeping an
// independent prefix; nullopt iff the set is good. With `within`, only those
// points are scanned (in the given order) and the cert indexes the ambient set.
std::optional<LoopCert> find_loop(const PointSet& points);
std::optional<LoopCert> find_loop(const PointSet& points, std::span<const std::size_t> within);

// Coefficients of a set that is itself a loop. Throws PreconditionError when
// the set is independent or not minimal.
LoopCert loop_coefficients(const PointSet& loop);

inline constexpr std::size_t kDefaultLoopBound = 16;

// Every loop contained in the set, canonical, sorted by point indices.
// Throws CapExceeded when |S| > bound or more than `cap` loops exist.
std::vector<LoopCert> enumerate_loops(const PointSet& points, std::size_t cap,
                                      std::size_t bound = kDefaultLoopBound);

// Greedy basis of the incidence rows. The one-argument form scans in
// canonical order; `order` must be a permutation of 0..|S|-1. The result is
// sorted ascending.
Selection maximal_good_subset(const PointSet& points);
Selection maximal_good_subset(const PointSet& points, std::span<const std::size_t> order);

bool is_maximal_good(const PointSet& points, std::span<const std::size_t> subset);

// The unique loop {x, y_2, ..., y_k} with every y_j in m; x comes first and
// has a positive coefficient. Throws PreconditionError if x is in m or m is
// not maximal good.
LoopCert fundamental_loop(const PointSet& points, std::span<const std::size_t> m, std::size_t x);

// f|M, listed in the order of m.
PointFunction restrict_to(const PointFunction& f, std::span<const std::size_t> m);

// The unique f in U(S) with f|M = g (g listed in the order of m).
PointFunction extend_from_maximal_good(const PointSet& points, std::span<const std::size_t> m,
                                       const PointFunction& g);

// Normalized measures of the fundamental loops of the points outside m, in
// canonical order: a basis of U(S)^perp.
std::vector<Measure> uperp_fundamental_basis(const PointSet& points, std::span<const std::size_t> m);

// One sign-aligned piece of a conformal decomposition: orientation * scale *
// coeffs over loop.points, with scale > 0.
struct ConformalTerm {
  LoopCert loop;
  int orientation = 1;
  Rational scale;

  // scale * sum_j |n_j|.
  Rational l1() const;
};

struct ConformalDecomposition {
  std::vector<ConformalTerm> terms;
  // Number of sign-repair pivots performed.
  std::size_t pivots = 0;

  RationalVector recombine(std::size_t size) const;
  Rational l1() const;
};

// Writes a weak loop vector m (an element of the kernel of the marginal map)
// as a sum of scaled loops whose signs agree with m wherever they are
// nonzero, so that norms add. Throws PreconditionError when m is zero, has
// the wrong length, or has a nonvanishing marginal.
ConformalDecomposition decompose_weak_loop(const PointSet& points, std::span<const Rational> m);

}  // namespace goodsets
