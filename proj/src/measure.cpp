#include "goodsets/measure.hpp"

#include <algorithm>

namespace goodsets {

Measure::Measure(RationalVector values) : values_(std::move(values)) {
  for (const auto& v : values_) norm_ += abs(v);
}

Selection Measure::support() const {
  Selection s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (sgn(values_[i]) != 0) s.push_back(i);
  }
  return s;
}

Rational Measure::integrate(std::span<const Rational> f) const {
  Rational total = 0;
  for (std::size_t i = 0; i < values_.size() && i < f.size(); ++i) {
    if (sgn(values_[i]) != 0) total += values_[i] * f[i];
  }
  return total;
}

Measure Measure::operator-() const {
  RationalVector v = values_;
  for (auto& x : v) x = -x;
  return Measure(std::move(v));
}

Measure operator+(const Measure& a, const Measure& b) {
  RationalVector v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Measure(std::move(v));
}

Measure operator*(const Rational& s, const Measure& m) {
  RationalVector v = m.values_;
  for (auto& x : v) x *= s;
  return Measure(std::move(v));
}

bool Measure::operator<(const Measure& other) const {
  return std::lexicographical_compare(values_.begin(), values_.end(), other.values_.begin(),
                                      other.values_.end());
}

}  // namespace goodsets
