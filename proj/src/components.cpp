#include "goodsets/components.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "goodsets/errors.hpp"
#include "goodsets/structure.hpp"

namespace goodsets {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Selection> normalize_parts(std::vector<Selection> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(), [](const Selection& a, const Selection& b) { return a.front() < b.front(); });
  return parts;
}

std::vector<Selection> parts_from(UnionFind& uf, std::size_t size) {
  std::map<std::size_t, Selection> groups;
  for (std::size_t p = 0; p < size; ++p) groups[uf.find(p)].push_back(p);
  std::vector<Selection> parts;
  for (auto& [root, members] : groups) parts.push_back(std::move(members));
  return normalize_parts(std::move(parts));
}

std::set<std::size_t> pool(const CoordinateIndex& index, const Selection& part) {
  std::set<std::size_t> cols;
  for (auto p : part) {
    for (auto c : index.point_columns(p)) cols.insert(c);
  }
  return cols;
}

// Which method actually runs for this input size.
PartitionMethod resolve_method(std::size_t size, const ComponentOptions& options) {
  if (options.method == PartitionMethod::heuristic || size <= options.oracle_bound) return options.method;
  if (options.heuristic_fallback) return PartitionMethod::heuristic;
  throw CapExceeded("oracle component search is bounded at " + std::to_string(options.oracle_bound) +
                    " points, the set has " + std::to_string(size) + " (heuristic fallback not permitted)");
}

void require_good(const PointSet& points) {
  if (!is_good(points)) throw PreconditionError("the set is not good");
}

// Oracle for a good set: full subsets are exactly those with
// |T| = N(T) - (n-1), so a coordinate count per subset suffices.
std::vector<Selection> related_oracle(const PointSet& points) {
  const std::size_t k = points.size();
  if (k > 31) throw CapExceeded("oracle component search supports at most 31 points");
  const CoordinateIndex index(points);
  std::vector<std::uint32_t> column_mask(index.size(), 0);
  for (std::size_t p = 0; p < k; ++p) {
    for (auto c : index.point_columns(p)) column_mask[c] |= std::uint32_t{1} << p;
  }
  UnionFind uf(k);
  const std::size_t shift = points.dimension() - 1;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << k); ++subset) {
    if (std::has_single_bit(subset)) continue;
    std::size_t coords = 0;
    for (auto mask : column_mask) coords += (mask & subset) != 0;
    if (static_cast<std::size_t>(std::popcount(subset)) + shift != coords) continue;
    const auto first = static_cast<std::size_t>(std::countr_zero(subset));
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) uf.unite(first, std::countr_zero(rest));
  }
  return parts_from(uf, k);
}

// Oracle for any set: depth-first over subsets keeping the incidence rank
// and coordinate count of the current subset.
std::vector<Selection> relatively_full_oracle(const PointSet& points) {
  const std::size_t k = points.size();
  const CoordinateIndex index(points);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t p = 0; p < k; ++p) rows.push_back(index.incidence_row(p));

  UnionFind uf(k);
  std::vector<std::size_t> multiplicity(index.size(), 0);
  std::size_t coords = 0;
  Selection chosen;
  const std::size_t shift = points.dimension() - 1;

  auto visit = [&](auto&& self, std::size_t start, const IncrementalBasis& basis) -> void {
    for (std::size_t p = start; p < k; ++p) {
      IncrementalBasis next = basis;
      next.insert(rows[p]);
      for (auto c : index.point_columns(p)) coords += multiplicity[c]++ == 0;
      chosen.push_back(p);
      if (next.size() + shift == coords) {
        for (auto q : chosen) uf.unite(chosen.front(), q);
      }
      self(self, p + 1, next);
      chosen.pop_back();
      for (auto c : index.point_columns(p)) coords -= --multiplicity[c] == 0;
    }
  };
  visit(visit, 0, IncrementalBasis(index.size()));
  return parts_from(uf, k);
}

// Points that differ in exactly one axis form a relatively full pair.
std::vector<Selection> relatively_full_heuristic(const PointSet& points) {
  const std::size_t k = points.size();
  const std::size_t n = points.dimension();
  UnionFind uf(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t differ = 0;
      for (std::size_t axis = 0; axis < n; ++axis) differ += points[a][axis] != points[b][axis];
      if (differ == 1) uf.unite(a, b);
    }
  }
  return parts_from(uf, k);
}

}  // namespace

std::string to_string(PartitionKind kind) {
  return kind == PartitionKind::related ? "related" : "relatively_full";
}

std::string to_string(PartitionMethod method) {
  return method == PartitionMethod::oracle ? "oracle" : "heuristic";
}

std::vector<std::size_t> Partition::part_of(std::size_t size) const {
  std::vector<std::size_t> owner(size, parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto p : parts[i]) owner.at(p) = i;
  }
  return owner;
}

bool Partition::refines(const Partition& coarser, std::size_t size) const {
  const auto owner = coarser.part_of(size);
  for (const auto& part : parts) {
    for (auto p : part) {
      if (owner[p] != owner[part.front()]) return false;
    }
  }
  return true;
}

Partition related_merge_heuristic(const PointSet& points, std::optional<std::size_t> merge_limit) {
  const CoordinateIndex index(points);
  const std::size_t target = points.dimension() - 1;
  std::vector<Selection> parts;
  std::vector<std::set<std::size_t>> pools;
  for (std::size_t p = 0; p < points.size(); ++p) {
    parts.push_back({p});
    pools.push_back(pool(index, parts.back()));
  }
  // Two full parts of a good set sharing exactly n-1 coordinates have a full
  // union: the counts add up to |P| + |Q| = N(P u Q) - (n-1).
  std::size_t merges = 0;
  bool merged = true;
  while (merged && (!merge_limit || merges < *merge_limit)) {
    merged = false;
    for (std::size_t i = 0; i < parts.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < parts.size() && !merged; ++j) {
        std::size_t shared = 0;
        for (auto c : pools[j]) shared += pools[i].count(c);
        if (shared != target) continue;
        parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
        pools[i].insert(pools[j].begin(), pools[j].end());
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
        pools.erase(pools.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
        ++merges;
      }
    }
  }
  Partition out;
  out.kind = PartitionKind::related;
  out.method = PartitionMethod::heuristic;
  out.parts = normalize_parts(std::move(parts));
  return out;
}

Partition related_components(const PointSet& points, const ComponentOptions& options) {
  require_good(points);
  const PartitionMethod method = resolve_method(points.size(), options);
  if (method == PartitionMethod::heuristic) return related_merge_heuristic(points);
  Partition out;
  out.kind = PartitionKind::related;
  out.method = PartitionMethod::oracle;
  out.parts = related_oracle(points);
  return out;
}

Partition relatively_full_components(const PointSet& points, const ComponentOptions& options) {
  Partition out;
  out.kind = PartitionKind::relatively_full;
  out.method = resolve_method(points.size(), options);
  out.parts = out.method == PartitionMethod::oracle ? relatively_full_oracle(points)
                                                    : relatively_full_heuristic(points);
  return out;
}

std::optional<Selection> find_full_witness(const PointSet& points, std::size_t x, std::size_t y,
                                           std::size_t bound) {
  if (x >= points.size() || y >= points.size()) throw PreconditionError("point index out of range");
  if (points.size() > bound) {
    throw CapExceeded("full witness search is bounded at " + std::to_string(bound) + " points");
  }
  require_good(points);
  if (x == y) return Selection{x};

  const CoordinateIndex index(points);
  Selection others;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (p != x && p != y) others.push_back(p);
  }
  const std::size_t shift = points.dimension() - 1;
  for (std::size_t extra = 0; extra <= others.size(); ++extra) {
    // Combinations of `extra` further points in lexicographic order.
    std::vector<bool> pick(others.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), true);
    do {
      Selection candidate{x, y};
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (pick[i]) candidate.push_back(others[i]);
      }
      if (candidate.size() + shift == coordinate_count(index, candidate)) {
        std::sort(candidate.begin(), candidate.end());
        return candidate;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

QuotientModel quotient(const PointSet& points, const ComponentOptions& options) {
  Partition components = related_components(points, options);
  Selection cross_section;
  for (const auto& part : components.parts) cross_section.push_back(part.front());
  return quotient(points, components, cross_section);
}

QuotientModel quotient(const PointSet& points, const Partition& components, const Selection& cross_section) {
  require_good(points);
  if (cross_section.size() != components.parts.size()) {
    throw PreconditionError("cross-section must pick one point per component");
  }
  for (std::size_t a = 0; a < components.parts.size(); ++a) {
    const auto& part = components.parts[a];
    if (std::find(part.begin(), part.end(), cross_section[a]) == part.end()) {
      throw PreconditionError("cross-section point does not belong to its component");
    }
  }

  const CoordinateIndex index(points);
  const std::size_t n = points.dimension();
  // Labels of one component on one axis are E_i-equivalent; chaining through
  // shared labels is the transitive closure the union-find provides.
  UnionFind uf(index.size());
  for (const auto& part : components.parts) {
    std::vector<std::size_t> first(n, index.size());
    for (auto p : part) {
      const auto cols = index.point_columns(p);
      for (std::size_t axis = 0; axis < n; ++axis) {
        if (first[axis] == index.size()) first[axis] = cols[axis];
        uf.unite(first[axis], cols[axis]);
      }
    }
  }

  QuotientModel q;
  q.components = components;
  q.cross_section = cross_section;
  q.classes.resize(n);
  std::vector<std::size_t> class_id(index.size(), 0);
  std::vector<std::map<std::size_t, std::size_t>> root_id(n);
  for (std::size_t c = 0; c < index.size(); ++c) {
    const std::size_t axis = index.axis_of(c);
    auto [it, fresh] = root_id[axis].emplace(uf.find(c), root_id[axis].size());
    class_id[c] = it->second;
    q.classes[axis][index.label_of(c)] = it->second;
  }

  std::vector<Point> image;
  for (auto p : cross_section) {
    Point img;
    for (auto c : index.point_columns(p)) img.coords.push_back(std::to_string(class_id[c]));
    image.push_back(std::move(img));
  }
  try {
    q.image = PointSet(n, std::move(image));
  } catch (const InputError&) {
    throw std::logic_error("quotient: two components map to the same class tuple");
  }
  return q;
}

std::size_t shared_coordinates(const CoordinateIndex& index, const Selection& a, const Selection& b) {
  const auto pa = pool(index, a);
  std::size_t shared = 0;
  for (auto c : pool(index, b)) shared += pa.count(c);
  return shared;
}

std::size_t shared_axes(const CoordinateIndex& index, const Selection& a, const Selection& b) {
  const auto pa = pool(index, a);
  std::set<std::size_t> axes;
  for (auto c : pool(index, b)) {
    if (pa.count(c)) axes.insert(index.axis_of(c));
  }
  return axes.size();
}

UnionMaximalGoodReport check_union_maximal_good(const PointSet& points, std::size_t loop_cap,
                                                const ComponentOptions& options) {
  UnionMaximalGoodReport r;
  r.parts = relatively_full_components(points, options);
  for (const auto& part : r.parts.parts) {
    const PointSet sub = points.subset(part);
    Selection basis;
    for (auto local : maximal_good_subset(sub)) basis.push_back(part[local]);
    r.bases_full.push_back(is_full(points.subset(basis)));
    r.union_of_bases.insert(r.union_of_bases.end(), basis.begin(), basis.end());
    r.bases.push_back(std::move(basis));
  }
  std::sort(r.union_of_bases.begin(), r.union_of_bases.end());

  const CoordinateIndex index(points);
  r.union_is_good = is_independent(index, r.union_of_bases);
  r.union_is_maximal_good = r.union_is_good && is_maximal_good(points, r.union_of_bases);

  r.loops = enumerate_loops(points, loop_cap);
  const auto owner = r.parts.part_of(points.size());
  r.loops_within_parts = std::all_of(r.loops.begin(), r.loops.end(), [&](const LoopCert& loop) {
    return std::all_of(loop.points.begin(), loop.points.end(),
                       [&](std::size_t p) { return owner[p] == owner[loop.points.front()]; });
  });
  return r;
}

CoverCount cover_count(const PointSet& points, const std::vector<Selection>& cover) {
  std::vector<int> seen(points.size(), 0);
  for (const auto& part : cover) {
    if (part.empty()) throw PreconditionError("cover has an empty part");
    for (auto p : part) {
      if (p >= points.size() || seen[p]++) throw PreconditionError("cover parts overlap or leave the set");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0)) throw PreconditionError("cover misses a point");

  const CoordinateIndex index(points);
  CoverCount count;
  count.parts = cover.size();
  count.points = points.size();
  count.dimension = points.dimension();
  count.coordinates = index.size();
  for (const auto& part : cover) count.coordinate_sum += coordinate_count(index, part);
  return count;
}

}  // namespace goodsets
