#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// use plain rational Gauss-Jordan elimination and subset enumeration so they
// stay independent of the library's elimination code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goodsets/linalg.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets::testing {

inline PointSet make_set(std::size_t n, std::vector<std::vector<std::string>> pts) {
  std::vector<Point> points;
  for (auto& p : pts) points.push_back(Point{std::move(p)});
  return PointSet(n, std::move(points));
}

inline PointSet rectangle() { return make_set(2, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}}); }

inline PointSet four_point_set() {
  return make_set(3, {{"0", "0", "0"}, {"0", "0", "1"}, {"1", "1", "0"}, {"1", "1", "1"}});
}

inline PointSet grid_2x3() {
  return make_set(2, {{"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}});
}

inline PointSet six_cycle() {
  return make_set(2, {{"a", "x"}, {"b", "x"}, {"b", "y"}, {"c", "y"}, {"c", "z"}, {"a", "z"}});
}

inline RationalVector q(std::initializer_list<const char*> values) {
  RationalVector out;
  for (auto v : values) out.emplace_back(v);
  for (auto& v : out) v.canonicalize();
  return out;
}

// Rank by textbook Gauss-Jordan over mpq.
inline std::size_t naive_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t naive_rank(const RationalMatrix& m) {
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return naive_rank(std::move(rows));
}

// Incidence rows of the selected points, built from labels directly.
inline std::vector<RationalVector> naive_incidence(const PointSet& s, const std::vector<std::size_t>& sel) {
  std::vector<std::pair<std::size_t, std::string>> coords;
  for (const auto& p : s) {
    for (std::size_t a = 0; a < s.dimension(); ++a) coords.emplace_back(a, p[a]);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  std::vector<RationalVector> rows;
  for (auto i : sel) {
    RationalVector row(coords.size());
    for (std::size_t a = 0; a < s.dimension(); ++a) {
      const auto it = std::lower_bound(coords.begin(), coords.end(), std::make_pair(a, s[i][a]));
      row[static_cast<std::size_t>(it - coords.begin())] = 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::size_t> all_of(const PointSet& s) {
  std::vector<std::size_t> sel(s.size());
  for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = i;
  return sel;
}

inline std::size_t naive_set_rank(const PointSet& s, const std::vector<std::size_t>& sel) {
  return naive_rank(naive_incidence(s, sel));
}

inline std::size_t naive_coordinate_count(const PointSet& s, const std::vector<std::size_t>& sel) {
  std::vector<std::pair<std::size_t, std::string>> coords;
  for (auto i : sel) {
    for (std::size_t a = 0; a < s.dimension(); ++a) coords.emplace_back(a, s[i][a]);
  }
  std::sort(coords.begin(), coords.end());
  return static_cast<std::size_t>(std::unique(coords.begin(), coords.end()) - coords.begin());
}

inline std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> sel;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) sel.push_back(i);
  }
  return sel;
}

// Every loop as a sorted point list: dependent subsets all of whose proper
// subsets obtained by dropping one point are independent.
inline std::vector<std::vector<std::size_t>> brute_force_loops(const PointSet& s) {
  std::vector<std::vector<std::size_t>> loops;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s.size()); ++mask) {
    const auto sel = members(mask);
    if (naive_set_rank(s, sel) == sel.size()) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < sel.size() && minimal; ++drop) {
      auto rest = sel;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      minimal = naive_set_rank(s, rest) == rest.size();
    }
    if (minimal) loops.push_back(sel);
  }
  std::sort(loops.begin(), loops.end());
  return loops;
}

// Random distinct points on a small grid.
inline PointSet random_set(std::mt19937_64& rng, std::size_t n, std::size_t size, std::size_t labels) {
  std::uniform_int_distribution<std::size_t> pick(0, labels - 1);
  std::vector<Point> pts;
  std::size_t grid = 1;
  for (std::size_t a = 0; a < n; ++a) grid *= labels;
  size = std::min(size, grid);
  while (pts.size() < size) {
    Point p;
    for (std::size_t a = 0; a < n; ++a) p.coords.push_back(std::string(1, static_cast<char>('a' + pick(rng))));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

inline Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace goodsets::testing
