#include "goodsets/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "goodsets/errors.hpp"
#include "goodsets/linalg.hpp"
#include "goodsets/loops.hpp"

namespace goodsets {

namespace {

using Rng = std::mt19937_64;

// The loop kind ignores `size`, so its default budget cannot derive from it.
constexpr std::size_t kDefaultLoopBudget = 3;

std::size_t uniform(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

std::vector<std::size_t> axis_budgets(const GeneratorSpec& spec) {
  if (spec.budgets.empty()) {
    const std::size_t labels = spec.kind == GeneratorKind::loop ? kDefaultLoopBudget : spec.size;
    return std::vector<std::size_t>(spec.dimension, labels);
  }
  if (spec.budgets.size() == 1) return std::vector<std::size_t>(spec.dimension, spec.budgets.front());
  if (spec.budgets.size() != spec.dimension) {
    throw InputError("expected 1 or " + std::to_string(spec.dimension) + " label budgets");
  }
  return spec.budgets;
}

// Number of grid points, saturating at `cap`.
std::size_t grid_size(const std::vector<std::size_t>& budgets, std::size_t cap) {
  std::size_t total = 1;
  for (auto b : budgets) {
    if (total > cap / b) return cap;
    total *= b;
  }
  return std::min(total, cap);
}

Point grid_point(Rng& rng, const std::vector<std::size_t>& budgets) {
  Point p;
  for (auto b : budgets) p.coords.push_back(std::to_string(uniform(rng, b)));
  return p;
}

// Random grid points without repetition; all of them, shuffled, when the
// grid is small, otherwise rejection sampling.
class GridSampler {
 public:
  GridSampler(const std::vector<std::size_t>& budgets, Rng& rng) : budgets_(budgets), rng_(rng) {
    constexpr std::size_t kSmallGrid = 1 << 16;
    if (grid_size(budgets, kSmallGrid + 1) <= kSmallGrid) {
      std::vector<std::size_t> digits(budgets.size(), 0);
      for (;;) {
        Point p;
        for (auto d : digits) p.coords.push_back(std::to_string(d));
        all_.push_back(std::move(p));
        std::size_t axis = 0;
        while (axis < digits.size() && ++digits[axis] == budgets[axis]) digits[axis++] = 0;
        if (axis == digits.size()) break;
      }
      std::shuffle(all_.begin(), all_.end(), rng_);
      enumerated_ = true;
    }
  }

  // False once the grid (or the sampling budget) is exhausted.
  bool next(Point& out) {
    if (enumerated_) {
      if (cursor_ == all_.size()) return false;
      out = all_[cursor_++];
      return true;
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Point p = grid_point(rng_, budgets_);
      if (seen_.insert(p).second) {
        out = std::move(p);
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::size_t> budgets_;
  Rng& rng_;
  bool enumerated_ = false;
  std::vector<Point> all_;
  std::size_t cursor_ = 0;
  std::set<Point> seen_;
};

std::vector<Point> grow_full(std::size_t n, std::size_t size, const std::vector<std::size_t>& budgets, Rng& rng) {
  std::size_t capacity = 1;
  for (auto b : budgets) capacity += b - 1;
  if (size > capacity) {
    throw PreconditionError("label budgets allow full sets of at most " + std::to_string(capacity) + " points");
  }
  std::vector<std::size_t> used(n, 1);
  std::vector<Point> pts;
  pts.push_back(Point{std::vector<std::string>(n, "0")});
  while (pts.size() < size) {
    std::vector<std::size_t> open;
    for (std::size_t axis = 0; axis < n; ++axis) {
      if (used[axis] < budgets[axis]) open.push_back(axis);
    }
    const std::size_t fresh_axis = open[uniform(rng, open.size())];
    Point p;
    for (std::size_t axis = 0; axis < n; ++axis) {
      const std::size_t label = axis == fresh_axis ? used[axis]++ : uniform(rng, used[axis]);
      p.coords.push_back(std::to_string(label));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Point> sample_good(std::size_t size, const std::vector<std::size_t>& budgets, Rng& rng) {
  std::vector<Point> pts;
  std::map<std::pair<std::size_t, std::string>, std::size_t> columns;
  std::size_t total_columns = 0;
  for (auto b : budgets) total_columns += b;
  IncrementalBasis basis(total_columns);
  GridSampler sampler(budgets, rng);
  Point p;
  while (pts.size() < size && sampler.next(p)) {
    std::vector<Integer> row(total_columns, Integer(0));
    std::size_t offset = 0;
    for (std::size_t axis = 0; axis < budgets.size(); ++axis) {
      row[offset + std::stoul(p[axis])] = 1;
      offset += budgets[axis];
    }
    if (!basis.insert(row)) pts.push_back(p);
  }
  if (pts.size() < size) {
    throw PreconditionError("label budgets do not admit a good set of " + std::to_string(size) + " points");
  }
  return pts;
}

std::vector<Point> sample_random(std::size_t size, const std::vector<std::size_t>& budgets, Rng& rng) {
  std::vector<Point> pts;
  GridSampler sampler(budgets, rng);
  Point p;
  while (pts.size() < size && sampler.next(p)) pts.push_back(p);
  if (pts.size() < size) {
    throw PreconditionError("label budgets admit fewer than " + std::to_string(size) + " distinct points");
  }
  return pts;
}

std::vector<Point> sample_loop(std::size_t n, const std::vector<std::size_t>& budgets, Rng& rng) {
  std::vector<Point> pts;
  GridSampler sampler(budgets, rng);
  Point p;
  while (sampler.next(p)) {
    pts.push_back(p);
    const PointSet current(n, pts);
    if (auto loop = find_loop(current)) {
      std::vector<Point> out;
      Selection members = loop->points;
      std::sort(members.begin(), members.end());
      for (auto i : members) out.push_back(pts[i]);
      return out;
    }
  }
  throw PreconditionError("label budgets admit no loop");
}

std::vector<Point> relatively_full(std::size_t n, std::size_t size, const std::vector<std::size_t>& budgets,
                                   Rng& rng) {
  for (std::size_t core = (size + 1) / 2; core <= size; ++core) {
    Rng attempt_rng = rng;
    std::vector<Point> pts;
    try {
      pts = grow_full(n, core, budgets, attempt_rng);
    } catch (const PreconditionError&) {
      continue;
    }
    std::vector<std::size_t> used(n, 0);
    std::set<Point> present(pts.begin(), pts.end());
    for (const auto& p : pts) {
      for (std::size_t axis = 0; axis < n; ++axis) used[axis] = std::max(used[axis], std::stoul(p[axis]) + 1);
    }
    if (grid_size(used, size + 1) < size) continue;
    GridSampler sampler(used, attempt_rng);
    Point p;
    while (pts.size() < size && sampler.next(p)) {
      if (present.insert(p).second) pts.push_back(p);
    }
    if (pts.size() == size) {
      rng = attempt_rng;
      return pts;
    }
  }
  throw PreconditionError("label budgets do not admit a relatively full set of " + std::to_string(size) +
                          " points");
}

}  // namespace

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "full") return GeneratorKind::full;
  if (name == "good") return GeneratorKind::good;
  if (name == "random") return GeneratorKind::random;
  if (name == "loop") return GeneratorKind::loop;
  if (name == "relatively_full") return GeneratorKind::relatively_full;
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::full: return "full";
    case GeneratorKind::good: return "good";
    case GeneratorKind::random: return "random";
    case GeneratorKind::loop: return "loop";
    case GeneratorKind::relatively_full: return "relatively_full";
  }
  return "unknown";
}

PointSet generate(const GeneratorSpec& spec) {
  if (spec.dimension < 1) throw InputError("dimension must be at least 1");
  if (spec.size < 1) throw InputError("size must be at least 1");
  const auto budgets = axis_budgets(spec);
  if (std::any_of(budgets.begin(), budgets.end(), [](std::size_t b) { return b < 1; })) {
    throw InputError("label budgets must be at least 1");
  }
  Rng rng(spec.seed);
  std::vector<Point> pts;
  switch (spec.kind) {
    case GeneratorKind::full: pts = grow_full(spec.dimension, spec.size, budgets, rng); break;
    case GeneratorKind::good: pts = sample_good(spec.size, budgets, rng); break;
    case GeneratorKind::random: pts = sample_random(spec.size, budgets, rng); break;
    case GeneratorKind::loop: pts = sample_loop(spec.dimension, budgets, rng); break;
    case GeneratorKind::relatively_full: pts = relatively_full(spec.dimension, spec.size, budgets, rng); break;
  }
  return PointSet(spec.dimension, std::move(pts));
}

}  // namespace goodsets
