#pragma once

// Seeded generators for property tests.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<long>(xs.size()) - 1))];
  }

  /// Rational with |numerator| <= bound and 1 <= denominator <= bound.
  mpq_class rational(long bound, bool allow_zero = true) {
    for (;;) {
      mpq_class q(uniform(-bound, bound), uniform(1, bound));
      q.canonicalize();
      if (allow_zero || q != 0) return q;
    }
  }

  /// Rationals biased towards interesting valuations: a random power of p
  /// times a small rational.
  mpq_class padic_rational(long p, long bound, long max_shift) {
    mpq_class q = rational(bound, false);
    const long e = uniform(-max_shift, max_shift);
    mpz_class pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) q *= pp;
    else q /= pp;
    return q;
  }

  std::vector<mpq_class> tuple(std::size_t m, long bound) {
    std::vector<mpq_class> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(rational(bound));
    return out;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
