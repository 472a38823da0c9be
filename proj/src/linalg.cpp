#include "pmcf/linalg.hpp"

#include <utility>

#include "pmcf/errors.hpp"

namespace pmcf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = 1 / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "zero vector has no primitive scaling");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(Integer(n / g));
  return out;
}

}  // namespace pmcf
