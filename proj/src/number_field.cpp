#include "pmcf/number_field.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "pmcf/errors.hpp"
#include "pmcf/expression.hpp"
#include "pmcf/linalg.hpp"
#include "pmcf/padic.hpp"

namespace pmcf {

namespace {

/// Primitive integer polynomial with the same roots as f.
std::vector<Integer> integer_primitive(const Polynomial& f) {
  Integer lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    out.push_back(c.get_num() * (lcm_den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& c : out) c /= g;
  return out;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> primes;
  std::vector<unsigned long> exps;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    primes.push_back(d);
    exps.push_back(e);
  }
  if (n > 1) {
    primes.push_back(n);
    exps.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned long e = 1; e <= exps[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

bool has_rational_root(const Polynomial& f, const std::vector<Integer>& ints) {
  if (ints.front() == 0) return true;
  const auto num_divs = positive_divisors(ints.front());
  const auto den_divs = positive_divisors(ints.back());
  for (const auto& a : num_divs)
    for (const auto& b : den_divs)
      for (int sign : {1, -1})
        if (f(make_rational(Integer(sign * a), b)) == 0) return true;
  return false;
}

// Polynomials over F_p, constant first, trimmed.
using Fp = std::vector<long>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Fp fp_rem(Fp a, const Fp& b, long p) {
  const long inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - f * b[j], p);
    trim(a);
  }
  return a;
}

Fp fp_quo(Fp a, const Fp& b, long p) {
  const long inv = inv_mod(b.back(), p);
  if (a.size() < b.size()) return {};
  Fp q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - f * b[j], p);
    trim(a);
  }
  trim(q);
  return q;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, long p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return fp_rem(std::move(out), m, p);
}

Fp fp_powmod(Fp base, long e, const Fp& m, long p) {
  Fp r{1};
  base = fp_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Fp fp_gcd(Fp a, Fp b, long p) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Fp fp_derivative(const Fp& a, long p) {
  Fp d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mod(a[i] * static_cast<long>(i), p));
  trim(d);
  return d;
}

/// Degrees of the irreducible factors of a squarefree f over F_p.
std::vector<long> factor_degrees(Fp f, long p) {
  std::vector<long> degrees;
  Fp h{0, 1};
  for (long i = 1; 2 * i <= static_cast<long>(f.size()) - 1; ++i) {
    h = fp_powmod(h, p, f, p);
    Fp hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = mod(hx[1] - 1, p);
    trim(hx);
    const Fp g = fp_gcd(hx, f, p);
    const long dg = static_cast<long>(g.size()) - 1;
    if (dg > 0) {
      for (long k = 0; k < dg / i; ++k) degrees.push_back(i);
      f = fp_quo(f, g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<long>(f.size()) - 1);
  return degrees;
}

}  // namespace

std::optional<bool> prove_irreducible(const Polynomial& f) {
  const long d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const auto ints = integer_primitive(f);
  if (has_rational_root(f, ints)) return false;
  if (d <= 3) return true;

  // Possible degrees of a rational factor, narrowed by each good prime.
  std::set<long> possible;
  for (long k = 1; k < d; ++k) possible.insert(k);
  for (long p = 3; p < 600 && !possible.empty(); p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(ints.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    Fp fp;
    for (const auto& c : ints) fp.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
    trim(fp);
    if (fp_gcd(fp, fp_derivative(fp, p), p).size() > 1) continue;
    std::set<long> sums{0};
    for (long deg : factor_degrees(fp, p)) {
      std::set<long> next = sums;
      for (long s : sums) next.insert(s + deg);
      sums = std::move(next);
    }
    std::set<long> narrowed;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(narrowed, narrowed.begin()));
    possible = std::move(narrowed);
  }
  if (possible.empty()) return true;
  return std::nullopt;
}

NumberField::NumberField(const Polynomial& minpoly, IrreducibilityCheck check) : minpoly_(minpoly) {
  if (minpoly_.degree() < 2) throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 2");
  if (minpoly_.leading() != 1) throw Error(ErrorKind::InvalidArgument, "minimal polynomial must be monic");
  const auto proven = prove_irreducible(minpoly_);
  if (proven.has_value() && !*proven)
    throw Error(ErrorKind::ReducibleMinpoly, minpoly_.to_string() + " is reducible over Q");
  if (!proven.has_value() && check == IrreducibilityCheck::Required)
    throw Error(ErrorKind::ReducibleMinpoly, "irreducibility of " + minpoly_.to_string() + " could not be proven");
}

FieldPtr make_field(const Polynomial& minpoly, IrreducibilityCheck check) {
  return std::make_shared<const NumberField>(minpoly, check);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  const std::size_t d = field_->degree();
  if (coeffs_.size() > d) {
    coeffs_ = divmod(Polynomial(std::move(coeffs_)), field_->minpoly()).second.coeffs();
  }
  coeffs_.resize(d);
}

AlgebraicNumber AlgebraicNumber::from_rational(FieldPtr field, const Rational& c) {
  return AlgebraicNumber(std::move(field), {c});
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) { return AlgebraicNumber(std::move(field), {0, 1}); }

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

namespace {

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw Error(ErrorKind::FieldMismatch, "operands live in different number fields");
}

}  // namespace

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in number field");
  auto [g, s] = inverse_cofactor(as_polynomial(), field_->minpoly());
  if (g.degree() != 0) throw Error(ErrorKind::InternalMismatch, "non-unit gcd with an irreducible minimal polynomial");
  return AlgebraicNumber(field_, s.coeffs());
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  const Polynomial prod = a.as_polynomial() * b.as_polynomial();
  return AlgebraicNumber(a.field_, divmod(prod, a.field_->minpoly()).second.coeffs());
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::size_t AlgebraicNumber::hash() const noexcept {
  std::size_t seed = coeffs_.size();
  for (const auto& c : coeffs_) hash_combine(seed, hash_value(c));
  return seed;
}

std::string AlgebraicNumber::to_string() const { return as_polynomial().to_string(); }

AlgebraicNumber nf_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field operation");
}

namespace {

struct FieldRing {
  FieldPtr field;
  AlgebraicNumber constant(const Rational& c) const { return AlgebraicNumber::from_rational(field, c); }
  AlgebraicNumber variable() const { return AlgebraicNumber::generator(field); }
  AlgebraicNumber divide(const AlgebraicNumber& a, const AlgebraicNumber& b) const { return a / b; }
  AlgebraicNumber power(const AlgebraicNumber& base, long e) const {
    AlgebraicNumber r = constant(1);
    const AlgebraicNumber b = e < 0 ? base.inverse() : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * b;
    return r;
  }
};

}  // namespace

AlgebraicNumber parse_element(std::string_view text, const FieldPtr& field) {
  return ExpressionParser<FieldRing>(text, FieldRing{field}).parse();
}

AlgebraicNumber parse_coefficients(std::string_view text, const FieldPtr& field) {
  std::vector<Rational> coeffs;
  std::size_t begin = 0;
  for (;;) {
    const auto comma = text.find(',', begin);
    coeffs.push_back(parse_rational(text.substr(begin, comma == std::string_view::npos ? comma : comma - begin)));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  if (coeffs.size() > field->degree())
    throw Error(ErrorKind::ParseError, "more coefficients than the field degree");
  return AlgebraicNumber(field, std::move(coeffs));
}

std::optional<std::vector<Rational>> rational_linear_dependence(const std::vector<AlgebraicNumber>& values) {
  if (values.empty()) return std::nullopt;
  for (const auto& v : values) require_same_field(values.front(), v);
  const std::size_t d = values.front().field()->degree();
  RationalMatrix m(d, values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = values[j].coeffs()[i];
  auto basis = kernel_basis(std::move(m));
  if (basis.empty()) return std::nullopt;
  return primitive_integer_vector(basis.front());
}

std::optional<std::vector<Rational>> rational_linear_dependence(const std::vector<Rational>& values) {
  RationalMatrix m(1, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m(0, j) = values[j];
  auto basis = kernel_basis(std::move(m));
  if (basis.empty()) return std::nullopt;
  return primitive_integer_vector(basis.front());
}

}  // namespace pmcf
