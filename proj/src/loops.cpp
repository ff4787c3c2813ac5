#include "goodsets/loops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "goodsets/errors.hpp"
#include "goodsets/measures.hpp"
#include "goodsets/structure.hpp"

namespace goodsets {

namespace {

// N x k matrix whose columns are the incidence rows of the selected points.
RationalMatrix marginal_columns(const CoordinateIndex& index, std::span<const std::size_t> support) {
  RationalMatrix m(index.size(), support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    for (auto c : index.point_columns(support[j])) m(c, j) = 1;
  }
  return m;
}

Selection iota(std::size_t n) {
  Selection s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

LoopCert cert_from_dependency(std::span<const std::size_t> kept, std::size_t p, const IntegerVector& dep) {
  LoopCert cert;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (sgn(dep[j]) != 0) {
      cert.points.push_back(kept[j]);
      cert.coeffs.push_back(dep[j]);
    }
  }
  cert.points.push_back(p);
  cert.coeffs.push_back(dep.back());
  return cert.canonical();
}

void require_maximal_good(const PointSet& points, std::span<const std::size_t> m) {
  for (auto i : m) {
    if (i >= points.size()) throw PreconditionError("subset index out of range");
  }
  if (!is_maximal_good(points, m)) {
    throw PreconditionError("subset is not a maximal good subset of the set");
  }
}

int sign_product(const Rational& a, const Rational& b) { return sgn(a) * sgn(b); }

std::size_t conflicts(const RationalVector& a, const RationalVector& b) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sign_product(a[j], b[j]) < 0) ++count;
  }
  return count;
}

Selection support_of(const RationalVector& v) {
  Selection s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) s.push_back(j);
  }
  return s;
}

std::string dump(const RationalVector& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t j = 0; j < v.size(); ++j) out << (j ? ", " : "") << v[j].get_str();
  out << "]";
  return out.str();
}

struct Splitter {
  const PointSet& points;
  std::vector<ConformalTerm> leaves;
  std::size_t pivots = 0;

  void split(const RationalVector& v) {
    const Selection supp = support_of(v);
    const auto loop = find_loop(points, supp);
    if (!loop) {
      throw std::logic_error("decompose_weak_loop: support of a kernel vector is independent: " + dump(v));
    }
    if (loop->points == supp) {
      emit(*loop, v);
      return;
    }

    // v = n + r with n a scaled loop inside the support.
    RationalVector n(v.size());
    const Rational t = v[loop->points.front()] / Rational(loop->coeffs.front());
    for (std::size_t j = 0; j < loop->size(); ++j) n[loop->points[j]] = t * Rational(loop->coeffs[j]);
    RationalVector r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r[j] = v[j] - n[j];

    // Sign repair: each pivot zeroes one part at the first conflicting index
    // and never creates a new conflict.
    for (std::size_t before = conflicts(n, r); before > 0;) {
      std::size_t j0 = 0;
      while (sign_product(n[j0], r[j0]) >= 0) ++j0;
      if (abs(r[j0]) > abs(n[j0])) {
        const Rational k = n[j0] / r[j0];
        for (std::size_t j = 0; j < v.size(); ++j) {
          n[j] -= k * r[j];
          r[j] += k * r[j];
        }
      } else {
        const Rational k = r[j0] / n[j0];
        for (std::size_t j = 0; j < v.size(); ++j) {
          r[j] -= k * n[j];
          n[j] += k * n[j];
        }
      }
      ++pivots;
      const std::size_t after = conflicts(n, r);
      if (after >= before) {
        throw std::logic_error("decompose_weak_loop: sign-conflict count did not decrease (" +
                               std::to_string(before) + " -> " + std::to_string(after) +
                               ") for m = " + dump(v) + ", parts " + dump(n) + " and " + dump(r));
      }
      before = after;
    }

    // At least one part misses an index of supp(v). If the other still covers
    // all of it, shift weight between them until it loses an index too.
    RationalVector* small = &n;
    RationalVector* large = &r;
    if (support_of(n).size() == supp.size()) std::swap(small, large);
    if (support_of(*small).size() == supp.size()) {
      throw std::logic_error("decompose_weak_loop: no part lost an index for m = " + dump(v));
    }
    if (support_of(*large).size() == supp.size()) {
      Rational shift;
      bool first = true;
      for (std::size_t j : support_of(*small)) {
        const Rational ratio = (*large)[j] / (*small)[j];
        if (first || ratio < shift) shift = ratio;
        first = false;
      }
      for (std::size_t j = 0; j < v.size(); ++j) {
        (*large)[j] -= shift * (*small)[j];
        (*small)[j] += shift * (*small)[j];
      }
    }
    split(n);
    split(r);
  }

  void emit(const LoopCert& loop, const RationalVector& v) {
    const Rational alpha = v[loop.points.front()] / Rational(loop.coeffs.front());
    for (std::size_t j = 0; j < loop.size(); ++j) {
      if (v[loop.points[j]] != alpha * Rational(loop.coeffs[j])) {
        throw std::logic_error("decompose_weak_loop: vector on a loop is not a multiple of its coefficients");
      }
    }
    leaves.push_back({loop, sgn(alpha), abs(alpha)});
  }
};

}  // namespace

LoopCert LoopCert::canonical() const {
  Selection order = iota(points.size());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  LoopCert out;
  for (auto j : order) {
    out.points.push_back(points[j]);
    out.coeffs.push_back(coeffs[j]);
  }
  if (!out.coeffs.empty() && sgn(out.coeffs.front()) < 0) {
    for (auto& c : out.coeffs) c = -c;
  }
  return out;
}

LoopDefect classify_loop(const PointSet& ambient, std::span<const std::size_t> support) {
  const CoordinateIndex index(ambient);
  const auto kernel = nullspace_basis(marginal_columns(index, support));
  if (kernel.empty()) return LoopDefect::independent;
  if (kernel.size() > 1) return LoopDefect::not_minimal;
  const bool full_support =
      std::all_of(kernel.front().begin(), kernel.front().end(), [](const Rational& x) { return sgn(x) != 0; });
  return full_support ? LoopDefect::none : LoopDefect::not_minimal;
}

LoopValidation validate_loop(const PointSet& ambient, const LoopCert& cert) {
  LoopValidation v;
  if (cert.points.empty() || cert.points.size() != cert.coeffs.size()) return v;
  for (auto p : cert.points) {
    if (p >= ambient.size()) return v;
  }
  Selection sorted = cert.points;
  std::sort(sorted.begin(), sorted.end());
  v.distinct_points = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  v.nonzero = std::all_of(cert.coeffs.begin(), cert.coeffs.end(), [](const Integer& c) { return sgn(c) != 0; });
  Integer g = 0;
  for (const auto& c : cert.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  v.primitive = g == 1;
  v.sign_normalized = sgn(cert.coeffs.front()) > 0;

  const CoordinateIndex index(ambient);
  std::vector<Integer> sums(index.size(), Integer(0));
  for (std::size_t j = 0; j < cert.size(); ++j) {
    for (auto c : index.point_columns(cert.points[j])) sums[c] += cert.coeffs[j];
  }
  v.vanishing = std::all_of(sums.begin(), sums.end(), [](const Integer& s) { return sgn(s) == 0; });

  v.minimal = true;
  for (std::size_t drop = 0; drop < cert.size() && v.minimal; ++drop) {
    Selection rest;
    for (std::size_t j = 0; j < cert.size(); ++j) {
      if (j != drop) rest.push_back(cert.points[j]);
    }
    v.minimal = is_independent(index, rest);
  }
  if (v.distinct_points) {
    v.support_kernel_dim = nullspace_basis(marginal_columns(index, cert.points)).size();
  }
  return v;
}

std::optional<LoopCert> find_loop(const PointSet& points) { return find_loop(points, iota(points.size())); }

std::optional<LoopCert> find_loop(const PointSet& points, std::span<const std::size_t> within) {
  const CoordinateIndex index(points);
  IncrementalBasis basis(index.size());
  Selection kept;
  for (auto p : within) {
    if (auto dep = basis.insert(index.incidence_row(p))) return cert_from_dependency(kept, p, *dep);
    kept.push_back(p);
  }
  return std::nullopt;
}

LoopCert loop_coefficients(const PointSet& loop) {
  const CoordinateIndex index(loop);
  const Selection all = iota(loop.size());
  const auto kernel = nullspace_basis(marginal_columns(index, all));
  if (kernel.empty()) throw PreconditionError("not a loop: the points are independent (the set is good)");
  if (kernel.size() > 1) {
    throw PreconditionError("not a loop: the dependencies form a space of dimension " +
                            std::to_string(kernel.size()) + ", so a proper subset is dependent");
  }
  LoopCert cert;
  cert.points = all;
  cert.coeffs = primitive_integer_vector(kernel.front());
  if (!std::all_of(cert.coeffs.begin(), cert.coeffs.end(), [](const Integer& c) { return sgn(c) != 0; })) {
    throw PreconditionError("not a loop: the only dependency misses some points, so a proper subset is dependent");
  }
  return cert;
}

std::vector<LoopCert> enumerate_loops(const PointSet& points, std::size_t cap, std::size_t bound) {
  if (points.size() > bound) {
    throw CapExceeded("loop enumeration is bounded at " + std::to_string(bound) + " points, the set has " +
                      std::to_string(points.size()));
  }
  const CoordinateIndex index(points);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t p = 0; p < points.size(); ++p) rows.push_back(index.incidence_row(p));

  std::vector<LoopCert> loops;
  Selection chosen;
  // Depth-first over independent subsets in increasing index order. A loop is
  // recorded when the next point depends on every chosen point; dependent
  // extensions are never explored further since no superset of a dependent
  // set is a loop.
  auto visit = [&](auto&& self, std::size_t start, const IncrementalBasis& basis) -> void {
    for (std::size_t p = start; p < points.size(); ++p) {
      if (auto dep = basis.dependency(rows[p])) {
        const bool spans_all = std::all_of(dep->begin(), dep->end(), [](const Integer& c) { return sgn(c) != 0; });
        if (spans_all) {
          loops.push_back(cert_from_dependency(chosen, p, *dep));
          if (loops.size() > cap) {
            throw CapExceeded("more than " + std::to_string(cap) + " loops");
          }
        }
        continue;
      }
      IncrementalBasis next = basis;
      next.insert(rows[p]);
      chosen.push_back(p);
      self(self, p + 1, next);
      chosen.pop_back();
    }
  };
  visit(visit, 0, IncrementalBasis(index.size()));

  std::sort(loops.begin(), loops.end(), [](const LoopCert& a, const LoopCert& b) { return a.points < b.points; });
  return loops;
}

Selection maximal_good_subset(const PointSet& points) { return maximal_good_subset(points, iota(points.size())); }

Selection maximal_good_subset(const PointSet& points, std::span<const std::size_t> order) {
  Selection check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  if (check != iota(points.size())) throw std::invalid_argument("maximal_good_subset: order is not a permutation");

  const CoordinateIndex index(points);
  IncrementalBasis basis(index.size());
  Selection kept;
  for (auto p : order) {
    if (!basis.insert(index.incidence_row(p))) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool is_maximal_good(const PointSet& points, std::span<const std::size_t> subset) {
  const CoordinateIndex index(points);
  return is_independent(index, subset) && subset.size() == selection_rank(index, iota(points.size()));
}

LoopCert fundamental_loop(const PointSet& points, std::span<const std::size_t> m, std::size_t x) {
  if (x >= points.size()) throw PreconditionError("point index out of range");
  if (std::find(m.begin(), m.end(), x) != m.end()) {
    throw PreconditionError("the point belongs to the maximal good subset");
  }
  require_maximal_good(points, m);
  Selection basis_points(m.begin(), m.end());
  std::sort(basis_points.begin(), basis_points.end());

  const CoordinateIndex index(points);
  IncrementalBasis basis(index.size());
  for (auto p : basis_points) basis.insert(index.incidence_row(p));
  const auto dep = basis.dependency(index.incidence_row(x));
  if (!dep) throw std::logic_error("fundamental_loop: point independent of a maximal good subset");

  LoopCert cert;
  cert.points.push_back(x);
  cert.coeffs.push_back(dep->back());
  for (std::size_t j = 0; j < basis_points.size(); ++j) {
    if (sgn((*dep)[j]) != 0) {
      cert.points.push_back(basis_points[j]);
      cert.coeffs.push_back((*dep)[j]);
    }
  }
  return cert;
}

PointFunction restrict_to(const PointFunction& f, std::span<const std::size_t> m) {
  PointFunction g;
  g.values.reserve(m.size());
  for (auto i : m) g.values.push_back(f.values.at(i));
  return g;
}

PointFunction extend_from_maximal_good(const PointSet& points, std::span<const std::size_t> m,
                                       const PointFunction& g) {
  if (g.size() != m.size()) throw PreconditionError("function is not defined on every point of the subset");
  require_maximal_good(points, m);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t j = 0; j < m.size(); ++j) position[m[j]] = j;

  PointFunction f;
  f.values.resize(points.size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (const auto it = position.find(x); it != position.end()) {
      f.values[x] = g[it->second];
      continue;
    }
    const LoopCert loop = fundamental_loop(points, m, x);
    Rational value = 0;
    for (std::size_t j = 1; j < loop.size(); ++j) value += Rational(loop.coeffs[j]) * g[position.at(loop.points[j])];
    f.values[x] = -value / Rational(loop.coeffs.front());
  }
  return f;
}

std::vector<Measure> uperp_fundamental_basis(const PointSet& points, std::span<const std::size_t> m) {
  require_maximal_good(points, m);
  std::vector<bool> in_m(points.size(), false);
  for (auto i : m) in_m[i] = true;
  std::vector<Measure> basis;
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (!in_m[x]) basis.push_back(loop_measure(points, fundamental_loop(points, m, x)));
  }
  return basis;
}

Rational ConformalTerm::l1() const {
  Integer total = 0;
  for (const auto& c : loop.coeffs) total += abs(c);
  return scale * Rational(total);
}

RationalVector ConformalDecomposition::recombine(std::size_t size) const {
  RationalVector v(size);
  for (const auto& t : terms) {
    for (std::size_t j = 0; j < t.loop.size(); ++j) {
      v.at(t.loop.points[j]) += t.orientation * t.scale * Rational(t.loop.coeffs[j]);
    }
  }
  return v;
}

Rational ConformalDecomposition::l1() const {
  Rational total = 0;
  for (const auto& t : terms) total += t.l1();
  return total;
}

ConformalDecomposition decompose_weak_loop(const PointSet& points, std::span<const Rational> m) {
  if (m.size() != points.size()) throw PreconditionError("weak loop vector has the wrong length");
  const RationalVector v(m.begin(), m.end());
  if (support_of(v).empty()) throw PreconditionError("weak loop vector is zero");
  const CoordinateIndex index(points);
  const RationalVector margins = marginals(index, v);
  for (std::size_t c = 0; c < margins.size(); ++c) {
    if (sgn(margins[c]) != 0) {
      throw PreconditionError("marginal of coordinate (" + std::to_string(index.axis_of(c)) + ", " +
                              index.label_of(c) + ") is " + to_string(margins[c]) + ", not 0");
    }
  }

  Splitter splitter{points, {}, 0};
  splitter.split(v);

  // Repeated loops are merged; conformality forces equal orientations.
  std::map<Selection, ConformalTerm> merged;
  for (auto& leaf : splitter.leaves) {
    auto [it, fresh] = merged.emplace(leaf.loop.points, leaf);
    if (!fresh) {
      if (it->second.orientation != leaf.orientation) {
        throw std::logic_error("decompose_weak_loop: a loop occurs with both orientations");
      }
      it->second.scale += leaf.scale;
    }
  }
  ConformalDecomposition out;
  out.pivots = splitter.pivots;
  for (auto& [key, term] : merged) out.terms.push_back(std::move(term));

  if (out.recombine(points.size()) != v) throw std::logic_error("decompose_weak_loop: recombination failed for " + dump(v));
  if (out.l1() != Measure(v).norm()) throw std::logic_error("decompose_weak_loop: norms do not add for " + dump(v));
  return out;
}

}  // namespace goodsets
