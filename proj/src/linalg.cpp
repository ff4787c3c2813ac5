#include "goodsets/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace goodsets {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RationalMatrix: entry count does not match dimensions");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  }
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("RationalMatrix::multiply: dimension mismatch");
  }
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

namespace {

// Scales a rational row by the lcm of its denominators.
IntegerVector integer_row(std::span<const Rational> row) {
  Integer scale = 1;
  for (const auto& q : row) {
    if (sgn(q) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  }
  IntegerVector out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (scale / row[j].get_den());
  }
  return out;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

EchelonForm eliminate(std::vector<IntegerVector> a, std::size_t cols) {
  EchelonForm out;
  out.cols = cols;
  const std::size_t rows = a.size();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    out.pivot_columns.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace

EchelonForm bareiss_echelon(const RationalMatrix& m) {
  std::vector<IntegerVector> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m.row(r)));
  return eliminate(std::move(a), m.cols());
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const EchelonForm e = bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols());
    x[free] = 1;
    for (std::size_t i = e.rank(); i-- > 0;) {
      const std::size_t pc = e.pivot_columns[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (sgn(e.rows[i][j]) != 0 && sgn(x[j]) != 0) acc += Rational(e.rows[i][j]) * x[j];
      }
      x[pc] = -acc / Rational(e.rows[i][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve_linear: right-hand side length does not match rows");
  }
  const std::size_t cols = m.cols();
  std::vector<IntegerVector> a;
  a.reserve(m.rows());
  std::vector<Rational> augmented(cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), augmented.begin());
    augmented[cols] = b[r];
    a.push_back(integer_row(augmented));
  }
  const EchelonForm e = eliminate(std::move(a), cols + 1);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == cols) return std::nullopt;

  RationalVector x(cols);
  for (std::size_t i = e.rank(); i-- > 0;) {
    const std::size_t pc = e.pivot_columns[i];
    Rational acc = Rational(e.rows[i][cols]);
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (sgn(e.rows[i][j]) != 0 && sgn(x[j]) != 0) acc -= Rational(e.rows[i][j]) * x[j];
    }
    x[pc] = acc / Rational(e.rows[i][pc]);
  }
  return x;
}

IntegerVector primitive_integer_vector(std::span<const Rational> v) {
  IntegerVector scaled = integer_row(v);
  return primitive_integer_vector(std::span<const Integer>(scaled));
}

IntegerVector primitive_integer_vector(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_integer_vector: zero vector");
  IntegerVector out(v.begin(), v.end());
  const auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return sgn(x) != 0; });
  const bool flip = sgn(*lead) < 0;
  for (auto& x : out) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (flip) x = -x;
  }
  return out;
}

RationalVector to_rational(std::span<const Integer> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IncrementalBasis::IncrementalBasis(std::size_t dimension) : dimension_(dimension) {}

IncrementalBasis::Reduction IncrementalBasis::reduce(std::span<const Integer> v) const {
  if (v.size() != dimension_) {
    throw std::invalid_argument("IncrementalBasis: vector length does not match dimension");
  }
  Reduction red;
  red.residual.assign(v.begin(), v.end());
  red.combination.assign(rows_.size() + 1, Integer(0));
  red.combination.back() = 1;
  for (const Row& row : rows_) {
    const Integer a = red.residual[row.pivot];
    if (sgn(a) == 0) continue;
    const Integer& p = row.entries[row.pivot];
    for (std::size_t j = 0; j < dimension_; ++j) {
      red.residual[j] = p * red.residual[j] - a * row.entries[j];
    }
    for (std::size_t j = 0; j < red.combination.size(); ++j) {
      red.combination[j] *= p;
      if (j < row.combination.size()) red.combination[j] -= a * row.combination[j];
    }
    Integer g = content(red.residual);
    const Integer gc = content(red.combination);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gc.get_mpz_t());
    if (g > 1) {
      for (auto& x : red.residual) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      for (auto& x : red.combination) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return red;
}

std::optional<IntegerVector> IncrementalBasis::dependency(std::span<const Integer> v) const {
  Reduction red = reduce(v);
  const bool zero = std::all_of(red.residual.begin(), red.residual.end(),
                                [](const Integer& x) { return sgn(x) == 0; });
  if (!zero) return std::nullopt;
  IntegerVector c = primitive_integer_vector(std::span<const Integer>(red.combination));
  if (sgn(c.back()) < 0) {
    for (auto& x : c) x = -x;
  }
  return c;
}

std::optional<IntegerVector> IncrementalBasis::insert(std::span<const Integer> v) {
  Reduction red = reduce(v);
  const auto lead = std::find_if(red.residual.begin(), red.residual.end(),
                                 [](const Integer& x) { return sgn(x) != 0; });
  if (lead == red.residual.end()) {
    IntegerVector c = primitive_integer_vector(std::span<const Integer>(red.combination));
    if (sgn(c.back()) < 0) {
      for (auto& x : c) x = -x;
    }
    return c;
  }
  Row row;
  row.pivot = static_cast<std::size_t>(lead - red.residual.begin());
  row.entries = std::move(red.residual);
  row.combination = std::move(red.combination);
  rows_.push_back(std::move(row));
  return std::nullopt;
}

}  // namespace goodsets
