#pragma once

// Reference implementations written independently of the library: plain
// loops over mpq_class, no shared helpers. Used to cross-check outputs.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Q make(long n, long d = 1) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

/// v_p by repeated division; nullopt for 0.
inline std::optional<long> val(const Q& x, long p) {
  if (x == 0) return std::nullopt;
  long v = 0;
  Z n = x.get_num(), d = x.get_den();
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  return v;
}

inline Z pow_int(long p, long k) {
  Z r = 1;
  for (long i = 0; i < k; ++i) r *= p;
  return r;
}

/// Centered residue of a/b modulo M = p^k for b prime to p, in (-M/2, M/2).
inline Z centered_residue(const Z& a, const Z& b, const Z& M) {
  Z binv;
  mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), M.get_mpz_t());
  Z r = (a * binv) % M;
  if (r < 0) r += M;
  if (2 * r > M) r -= M;
  return r;
}

/// Browkin's s: with k = max(0, -v(x)), y = x p^k is p-integral and the
/// balanced digits of y below p^k sum to its centered residue mod p^k.
inline Q s(const Q& x, long p) {
  if (x == 0) return 0;
  const long v = *val(x, p);
  if (v > 0) return 0;
  const long k = -v;
  Q y = x * Q(pow_int(p, k));
  const Z M = pow_int(p, k + 1);
  // Digits with exponent <= 0 of x are those of y below p^(k+1).
  const Z r = centered_residue(y.get_num(), y.get_den(), M);
  Q out(r, pow_int(p, k));
  out.canonicalize();
  return out;
}

/// Direct Jacobi-Perron on rationals; returns columns a_n^(1..m) (no trailing 1).
inline std::vector<std::vector<Q>> jp(std::vector<Q> alpha, long p, std::size_t max_steps, bool* finished) {
  std::vector<std::vector<Q>> cols;
  const std::size_t m = alpha.size();
  *finished = false;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::vector<Q> a(m);
    for (std::size_t k = 0; k < m; ++k) a[k] = s(alpha[k], p);
    cols.push_back(a);
    const Q last = alpha[m - 1] - a[m - 1];
    if (last == 0) {
      *finished = true;
      return cols;
    }
    std::vector<Q> next(m);
    next[0] = 1 / last;
    for (std::size_t k = 1; k < m; ++k) next[k] = next[0] * (alpha[k - 1] - a[k - 1]);
    alpha = next;
  }
  return cols;
}

using Mat = std::vector<std::vector<Q>>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Laplace expansion along the first row.
inline Q det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Q total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Q> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    const Q term = a[0][j] * det(minor);
    total += (j % 2 == 0) ? term : Q(-term);
  }
  return total;
}

/// Step matrix with first column a (length m+1) and ones on the superdiagonal.
inline Mat step_matrix(const std::vector<Q>& a) {
  const std::size_t n = a.size();
  Mat s(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    s[i][0] = a[i];
    if (i + 1 < n) s[i][i + 1] = 1;
  }
  return s;
}

/// Convergent Q_n from the first column of the product of step matrices.
inline std::vector<Q> convergent(const std::vector<std::vector<Q>>& columns) {
  const std::size_t n = columns.front().size();
  Mat b(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  for (const auto& c : columns) b = mat_mul(b, step_matrix(c));
  std::vector<Q> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(b[i][0] / b[n - 1][0]);
  return out;
}

}  // namespace oracle
