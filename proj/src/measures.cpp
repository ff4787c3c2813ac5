#include "goodsets/measures.hpp"

#include <algorithm>
#include <set>

#include "goodsets/errors.hpp"
#include "goodsets/structure.hpp"

namespace goodsets {

namespace {

bool leads_positive(const Measure& mu) {
  for (const auto& v : mu.values()) {
    if (sgn(v) != 0) return sgn(v) > 0;
  }
  return true;
}

// Dimension of {v : marginals of v vanish, supp v within `support`}.
std::size_t support_kernel_dim(const CoordinateIndex& index, std::span<const std::size_t> support) {
  return support.size() - selection_rank(index, support);
}

}  // namespace

Measure loop_measure(const PointSet& points, const LoopCert& cert) {
  if (!validate_loop(points, cert).ok()) throw PreconditionError("invalid loop certificate");
  Integer total = 0;
  for (const auto& c : cert.coeffs) total += abs(c);
  RationalVector values(points.size());
  for (std::size_t j = 0; j < cert.size(); ++j) {
    values[cert.points[j]] = Rational(cert.coeffs[j], total);
    values[cert.points[j]].canonicalize();
  }
  return Measure(std::move(values));
}

RationalVector marginals(const CoordinateIndex& index, std::span<const Rational> mu) {
  RationalVector out(index.size());
  for (std::size_t p = 0; p < mu.size(); ++p) {
    if (sgn(mu[p]) == 0) continue;
    for (auto c : index.point_columns(p)) out[c] += mu[p];
  }
  return out;
}

bool in_uperp(const PointSet& points, const Measure& mu) {
  if (mu.size() != points.size()) return false;
  const RationalVector m = marginals(CoordinateIndex(points), mu.values());
  return std::all_of(m.begin(), m.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t uperp_dimension(const PointSet& points) { return analyze_structure(points).excess; }

std::vector<Measure> canonical_signed_pairs(std::vector<Measure> measures) {
  const std::size_t size = measures.empty() ? 0 : measures.front().size();
  std::set<Measure> reps;
  bool has_zero = false;
  for (auto& mu : measures) {
    if (mu.is_zero()) {
      has_zero = true;
      continue;
    }
    reps.insert(leads_positive(mu) ? std::move(mu) : -mu);
  }
  std::vector<Measure> out;
  if (has_zero) out.push_back(Measure::zero(size));
  for (const auto& mu : reps) {
    out.push_back(mu);
    out.push_back(-mu);
  }
  return out;
}

std::vector<Measure> enumerate_extreme_points(const PointSet& points, std::size_t bound) {
  if (points.size() > bound) {
    throw CapExceeded("extreme point enumeration is bounded at " + std::to_string(bound) +
                      " points, the set has " + std::to_string(points.size()));
  }
  const std::size_t k = points.size();
  const CoordinateIndex index(points);
  const std::size_t dim = index.size() + 1;  // marginal rows, then the mass row

  // Columns of the lifted system: p_j = (B_j; 1), q_j = (-B_j; 1), t = (0; 1).
  auto lifted = [&](std::size_t p, int sign) {
    std::vector<Integer> col(dim, Integer(0));
    for (auto c : index.point_columns(p)) col[c] = sign;
    col.back() = 1;
    return col;
  };
  std::vector<Integer> slack(dim, Integer(0));
  slack.back() = 1;
  const std::vector<Integer>& rhs = slack;

  struct Chosen {
    std::size_t point;  // k for the slack column
    int sign;
  };
  std::vector<Chosen> chosen;
  std::vector<Measure> vertices;

  // A vertex is the unique solution supported on an independent set of
  // columns, with every coefficient strictly positive. Once the right-hand
  // side lies in the span of the chosen columns no extension can give a
  // strictly positive unique solution, so the search stops there. Choosing at
  // most one of p_j, q_j per point restricts the search to complementary
  // solutions (p_j q_j = 0).
  auto record_if_vertex = [&](const IncrementalBasis& basis) -> bool {
    const auto dep = basis.dependency(rhs);
    if (!dep) return false;
    // sum_i c_i col_i + c_b rhs = 0  =>  x_i = -c_i / c_b.
    const Rational cb(dep->back());
    RationalVector mu(k);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const Rational x = -Rational((*dep)[i]) / cb;
      if (sgn(x) <= 0) return true;
      if (chosen[i].point < k) mu[chosen[i].point] = chosen[i].sign * x;
    }
    vertices.emplace_back(std::move(mu));
    return true;
  };

  auto visit = [&](auto&& self, std::size_t start, const IncrementalBasis& basis) -> void {
    for (std::size_t p = start; p < k; ++p) {
      for (int sign : {1, -1}) {
        const auto col = lifted(p, sign);
        if (basis.dependency(col)) continue;
        IncrementalBasis next = basis;
        next.insert(col);
        chosen.push_back({p, sign});
        if (!record_if_vertex(next)) self(self, p + 1, next);
        chosen.pop_back();
      }
    }
  };

  IncrementalBasis empty(dim);
  visit(visit, 0, empty);
  IncrementalBasis with_slack(dim);
  with_slack.insert(slack);
  chosen.push_back({k, 1});
  if (!record_if_vertex(with_slack)) visit(visit, 0, with_slack);
  chosen.pop_back();

  // Project and keep the points that are extreme in A: mu with |mu| = 1 whose
  // face system {v : marginals vanish, supp v within supp mu} is a line, or 0
  // when U(S)^perp is trivial.
  const bool trivial = uperp_dimension(points) == 0;
  std::vector<Measure> extreme;
  for (auto& mu : vertices) {
    if (mu.is_zero()) {
      if (trivial) extreme.push_back(mu);
      continue;
    }
    if (mu.norm() != 1) continue;
    if (support_kernel_dim(index, mu.support()) == 1) extreme.push_back(std::move(mu));
  }
  return canonical_signed_pairs(std::move(extreme));
}

std::vector<Measure> loop_extreme_points(const PointSet& points, std::size_t cap, std::size_t bound) {
  std::vector<Measure> out;
  for (const auto& loop : enumerate_loops(points, cap, bound)) out.push_back(loop_measure(points, loop));
  if (out.empty()) out.push_back(Measure::zero(points.size()));
  return canonical_signed_pairs(std::move(out));
}

bool is_extreme(const PointSet& points, const Measure& mu) {
  if (mu.size() != points.size()) throw PreconditionError("measure has the wrong length");
  if (!in_uperp(points, mu)) throw PreconditionError("measure has a nonvanishing marginal");
  if (mu.norm() > 1) throw PreconditionError("measure has norm greater than 1");
  if (mu.is_zero()) return uperp_dimension(points) == 0;
  if (mu.norm() != 1) return false;
  const Selection supp = mu.support();
  if (classify_loop(points, supp) != LoopDefect::none) return false;
  const auto loop = find_loop(points, supp);
  const Measure mu_l = loop_measure(points, *loop);
  return mu == mu_l || mu == -mu_l;
}

}  // namespace goodsets
