#pragma once

// Exact dense linear algebra over the rationals.
//
// Elimination is fraction-free (Bareiss): each row is first scaled to integers,
// then eliminated with exact integer division by the previous pivot, so the
// intermediate entries are minors of the input and stay bounded by Hadamard.
// Pivoting always takes the first row with a nonzero entry in the current
// column, which makes every result below a deterministic function of the
// input entries.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "goodsets/rational.hpp"

namespace goodsets {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Row-major entries; throws std::invalid_argument on a size mismatch.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  RationalMatrix transposed() const;
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;
  RationalMatrix select_columns(std::span<const std::size_t> cols) const;

  // Throws std::invalid_argument when x.size() != cols().
  RationalVector multiply(std::span<const Rational> x) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Row echelon form produced by fraction-free elimination. Only the first
// rank() rows are kept; row i has its leading entry in pivot_columns[i].
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<IntegerVector> rows;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return rows.size(); }
};

EchelonForm bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of {v : m v = 0}. One vector per free column, in ascending column
// order; the vector for free column f has a 1 at f and 0 at every other free
// column (the reduced-echelon convention).
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

// A solution of m x = b with every free variable set to zero, or nullopt when
// the system is inconsistent. Throws std::invalid_argument on size mismatch.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b);

// Integer vector parallel to v, entries with gcd 1, first nonzero entry
// positive. Throws std::invalid_argument for the zero vector.
IntegerVector primitive_integer_vector(std::span<const Rational> v);
IntegerVector primitive_integer_vector(std::span<const Integer> v);

RationalVector to_rational(std::span<const Integer> v);

// Vectors inserted one at a time; each insertion either extends the span or
// reports the integer dependency that kills the new vector.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  // Number of stored (independent) vectors.
  std::size_t size() const { return rows_.size(); }

  // Stores v and returns nullopt when v is independent of the stored vectors.
  // Otherwise leaves the basis unchanged and returns a primitive integer
  // vector c of length size() + 1 with sum_j c[j] stored_j + c.back() v = 0
  // and c.back() > 0.
  std::optional<IntegerVector> insert(std::span<const Integer> v);

  // Same test without storing.
  std::optional<IntegerVector> dependency(std::span<const Integer> v) const;

 private:
  struct Row {
    IntegerVector entries;
    std::size_t pivot;
    IntegerVector combination;  // over stored vectors
  };

  struct Reduction {
    IntegerVector residual;
    IntegerVector combination;  // over stored vectors, then v
  };

  Reduction reduce(std::span<const Integer> v) const;

  std::size_t dimension_;
  std::vector<Row> rows_;
};

}  // namespace goodsets
