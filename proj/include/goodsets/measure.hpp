#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "goodsets/linalg.hpp"
#include "goodsets/point_set.hpp"

namespace goodsets {

// Signed measure on the points of a PointSet, with its total variation
// (l1) norm.
class Measure {
 public:
  Measure() = default;
  explicit Measure(RationalVector values);
  static Measure zero(std::size_t size) { return Measure(RationalVector(size)); }

  const RationalVector& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const Rational& norm() const { return norm_; }
  bool is_zero() const { return sgn(norm_) == 0; }

  Selection support() const;
  // mu(f) = sum_x mu(x) f(x).
  Rational integrate(std::span<const Rational> f) const;

  Measure operator-() const;
  friend Measure operator+(const Measure& a, const Measure& b);
  friend Measure operator*(const Rational& s, const Measure& m);

  bool operator==(const Measure& other) const { return values_ == other.values_; }
  // Lexicographic on the value vector.
  bool operator<(const Measure& other) const;

 private:
  RationalVector values_;
  Rational norm_ = 0;
};

}  // namespace goodsets
