#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rational.hpp"

namespace llab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RationalMatrix transposed() const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Fraction-free (Bareiss) elimination. Every routine below first clears
// denominators row by row, which leaves rank, pivots and kernels unchanged.

/// Row echelon data: rank and the pivot columns, chosen greedily left to right.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

Echelon echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Exact determinant of a square matrix.
Rational determinant(const RationalMatrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Inverse of a square nonsingular matrix; throws InvalidArgument if singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace llab
