#pragma once

// Component structure of a finite point set.
//
// Related components (good sets only): x ~ y when some full subset contains
// both. Maximal relatively full components (any set): x ~ y when some
// relatively full subset contains both. Both relations are computed exactly
// by an oracle that scans every subset, or by a merge heuristic that only
// ever merges parts whose union is certified by a counting argument. The
// heuristic partition always refines the oracle partition.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goodsets/loops.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets {

enum class PartitionKind { related, relatively_full };
enum class PartitionMethod { oracle, heuristic };

std::string to_string(PartitionKind kind);
std::string to_string(PartitionMethod method);

struct Partition {
  // Disjoint, covering, each part ascending, parts ordered by least point.
  std::vector<Selection> parts;
  PartitionKind kind = PartitionKind::related;
  PartitionMethod method = PartitionMethod::oracle;

  // part_of()[p] is the index of the part containing point p.
  std::vector<std::size_t> part_of(std::size_t size) const;
  // Every part of *this lies inside a part of `coarser`.
  bool refines(const Partition& coarser, std::size_t size) const;
};

inline constexpr std::size_t kDefaultOracleBound = 14;

struct ComponentOptions {
  PartitionMethod method = PartitionMethod::oracle;
  std::size_t oracle_bound = kDefaultOracleBound;
  // Above the bound: heuristic with the method flag set, instead of CapExceeded.
  bool heuristic_fallback = false;
};

// Throws PreconditionError if the set is not good.
Partition related_components(const PointSet& points, const ComponentOptions& options = {});
Partition relatively_full_components(const PointSet& points, const ComponentOptions& options = {});

// Related-component heuristic stopped after at most `merge_limit` merges.
// Every part of the result is full.
Partition related_merge_heuristic(const PointSet& points, std::optional<std::size_t> merge_limit = std::nullopt);

// Smallest full subset containing both points (lexicographically first among
// those), or nullopt. Throws PreconditionError if the set is not good and
// CapExceeded above the bound.
std::optional<Selection> find_full_witness(const PointSet& points, std::size_t x, std::size_t y,
                                           std::size_t bound = kDefaultOracleBound);

struct QuotientModel {
  Partition components;
  // One point per component, in component order.
  Selection cross_section;
  // E_i-class id of every label, per axis.
  std::vector<std::map<std::string, std::size_t>> classes;
  // phi(C): the cross-section relabelled by class ids.
  PointSet image;
};

// Uses the least point of each related component as the cross-section.
QuotientModel quotient(const PointSet& points, const ComponentOptions& options = {});
// Explicit components and cross-section (one member of each part, in part order).
QuotientModel quotient(const PointSet& points, const Partition& components, const Selection& cross_section);

// Number of coordinates two selections have in common, and number of axes on
// which they share at least one label.
std::size_t shared_coordinates(const CoordinateIndex& index, const Selection& a, const Selection& b);
std::size_t shared_axes(const CoordinateIndex& index, const Selection& a, const Selection& b);

struct UnionMaximalGoodReport {
  Partition parts;
  // A maximal good subset of each part, and whether each one is full.
  std::vector<Selection> bases;
  std::vector<bool> bases_full;
  Selection union_of_bases;
  bool union_is_good = false;
  bool union_is_maximal_good = false;
  std::vector<LoopCert> loops;
  bool loops_within_parts = false;

  bool agree() const { return union_is_maximal_good == loops_within_parts; }
};

// The union of maximal good subsets of the maximal relatively full parts is
// maximal good in S exactly when every loop of S lies inside one part. Both
// sides are computed independently.
UnionMaximalGoodReport check_union_maximal_good(const PointSet& points, std::size_t loop_cap,
                                                const ComponentOptions& options = {});

// Coordinate bookkeeping for a cover of S by disjoint parts.
struct CoverCount {
  std::size_t parts = 0;           // k
  std::size_t coordinate_sum = 0;  // sum of N(part)
  std::size_t coordinates = 0;     // N(S)
  std::size_t points = 0;          // |S|
  std::size_t dimension = 0;       // n
  // coordinate_sum - coordinates: repeated coordinates across parts.
  std::size_t overlap() const { return coordinate_sum - coordinates; }
};

// Throws PreconditionError unless `cover` is a disjoint cover of S.
CoverCount cover_count(const PointSet& points, const std::vector<Selection>& cover);

}  // namespace goodsets
