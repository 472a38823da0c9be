#pragma once

#include <cstddef>
#include <vector>

#include "pmcf/rational.hpp"

namespace pmcf {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

Rational determinant(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m);

/// Scales a nonzero rational vector to a primitive integer vector
/// (gcd of entries 1), keeping the sign of the scaling positive.
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace pmcf
