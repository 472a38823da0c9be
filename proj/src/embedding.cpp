#include "pmcf/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pmcf/errors.hpp"

namespace pmcf {

namespace {

constexpr long kMaxSeparationDepth = 128;

using IntPoly = std::vector<Integer>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer eval(const IntPoly& g, const Integer& x) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly derivative(const IntPoly& g) {
  IntPoly d;
  for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<unsigned long>(i));
  return d;
}

/// Divides out the integer content (so the result is primitive).
void make_primitive(IntPoly& g) {
  Integer c = 0;
  for (const auto& x : g) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (c > 1)
    for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

/// g(r + p*w) as a polynomial in w, made primitive.
IntPoly taylor_shift(const IntPoly& g, const Integer& r, const Integer& p) {
  // Horner with the linear polynomial (r + p w).
  IntPoly acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    IntPoly next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * r;
      next[i + 1] += acc[i] * p;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  trim(acc);
  make_primitive(acc);
  return acc;
}

long mod_p(const Integer& x, const Prime& p) {
  return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p.value())));
}

void search_roots(const IntPoly& g, const Integer& shift, long depth, bool units_only, long lambda, const Prime& p,
                  std::vector<RootLocator>& out) {
  if (depth > kMaxSeparationDepth)
    throw Error(ErrorKind::LiftingObstruction,
                "repeated residue root not separated after " + std::to_string(kMaxSeparationDepth) + " levels");
  const IntPoly dg = derivative(g);
  const Integer pz = p.as_integer();
  const Integer p_depth = integer_pow(pz, static_cast<unsigned long>(depth));
  for (long r = units_only ? 1 : 0; r < p.value(); ++r) {
    const Integer rz = r;
    if (mod_p(eval(g, rz), p) != 0) continue;
    if (mod_p(eval(dg, rz), p) != 0) {
      out.push_back(RootLocator{lambda, shift, depth, g, rz, 1});
      continue;
    }
    IntPoly next = taylor_shift(g, rz, pz);
    if (next.size() <= 1) continue;
    search_roots(next, shift + rz * p_depth, depth + 1, false, lambda, p, out);
  }
}

}  // namespace

std::vector<NewtonSegment> newton_polygon(const Polynomial& f, const Prime& p) {
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(f.coeffs()[i], p).value());
  // Lower convex hull, left to right.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<NewtonSegment> segs;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long rise = hull[i].second - hull[i - 1].second;
    long run = hull[i].first - hull[i - 1].first;
    const long g = std::gcd(rise < 0 ? -rise : rise, run);
    segs.push_back({rise / g, run / g, run});
  }
  return segs;
}

std::vector<RootLocator> locate_padic_roots(const Polynomial& f, const Prime& p, long precision) {
  std::vector<RootLocator> out;
  if (f.coeffs().front() == 0) throw Error(ErrorKind::InvalidArgument, "polynomial has the root 0");
  for (const auto& seg : newton_polygon(f, p)) {
    if (seg.run != 1) continue;  // non-integer slope: roots outside Q_p
    const long lambda = -seg.rise;
    // G(y) = f(p^lambda y), scaled to a primitive integer polynomial.
    std::vector<Rational> scaled;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
      scaled.push_back(f.coeffs()[i] * rational_pow(p.as_integer(), lambda * static_cast<long>(i)));
    Integer lcm_den = 1;
    for (const auto& c : scaled) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly g;
    for (const auto& c : scaled) g.push_back(c.get_num() * (lcm_den / c.get_den()));
    make_primitive(g);
    search_roots(g, 0, 0, true, lambda, p, out);
  }
  for (auto& loc : out) lift_root(loc, p, precision);
  return out;
}

void lift_root(RootLocator& loc, const Prime& p, long target_precision) {
  const Integer pz = p.as_integer();
  const IntPoly dh = derivative(loc.h);
  while (loc.absolute_precision() < target_precision) {
    const long k = 2 * loc.z_precision;
    const Integer modulus = integer_pow(pz, static_cast<unsigned long>(k));
    Integer inv;
    Integer deriv = eval(dh, loc.z) % modulus;
    if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw Error(ErrorKind::LiftingObstruction, "derivative not a unit during Hensel lifting");
    Integer z = (loc.z - eval(loc.h, loc.z) * inv) % modulus;
    if (z < 0) z += modulus;
    loc.z = z;
    loc.z_precision = k;
  }
}

PAdicApprox locator_value(const RootLocator& loc, const Prime& p) {
  const Integer pz = p.as_integer();
  const Rational y = Rational(loc.shift + integer_pow(pz, static_cast<unsigned long>(loc.depth)) * loc.z);
  return PAdicApprox::from_rational(y * rational_pow(pz, loc.lambda), p, loc.absolute_precision());
}

std::vector<PAdicApprox> padic_roots(const NumberField& field, const Prime& p, long precision) {
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  std::vector<PAdicApprox> roots;
  for (const auto& loc : locate_padic_roots(field.minpoly(), p, precision))
    roots.push_back(locator_value(loc, p).truncated(precision));
  return roots;
}

PAdicApprox select_largest_root(const std::vector<PAdicApprox>& roots) {
  if (roots.empty()) throw Error(ErrorKind::NoRoot, "no root in Q_p");
  auto best = std::min_element(roots.begin(), roots.end(),
                               [](const auto& a, const auto& b) { return a.valuation() < b.valuation(); });
  const long v = best->valuation();
  if (std::count_if(roots.begin(), roots.end(), [v](const auto& r) { return r.valuation() == v; }) > 1)
    throw Error(ErrorKind::AmbiguousSelection, "several roots share the maximal norm p^" + std::to_string(-v));
  return *best;
}

PAdicEmbedding::PAdicEmbedding(FieldPtr field, const Prime& p, RootLocator root)
    : field_(std::move(field)), p_(p), state_(std::make_shared<State>()) {
  state_->root = std::move(root);
}

PAdicEmbedding PAdicEmbedding::largest_root(FieldPtr field, const Prime& p, long precision) {
  auto roots = locate_padic_roots(field->minpoly(), p, precision);
  if (roots.empty()) throw Error(ErrorKind::NoRoot, field->minpoly().to_string() + " has no root in Q_" + std::to_string(p.value()));
  auto best = std::min_element(roots.begin(), roots.end(),
                               [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  const long lambda = best->lambda;
  if (std::count_if(roots.begin(), roots.end(), [lambda](const auto& r) { return r.lambda == lambda; }) > 1)
    throw Error(ErrorKind::AmbiguousSelection, "several roots share the maximal norm");
  return PAdicEmbedding(std::move(field), p, *best);
}

long PAdicEmbedding::root_valuation() const noexcept { return state_->root.lambda; }

long PAdicEmbedding::achieved_precision() const {
  std::lock_guard lock(state_->mutex);
  return state_->root.absolute_precision();
}

PAdicApprox PAdicEmbedding::root() const {
  std::lock_guard lock(state_->mutex);
  return locator_value(state_->root, p_);
}

PAdicApprox PAdicEmbedding::root(long precision) const {
  std::lock_guard lock(state_->mutex);
  if (state_->root.absolute_precision() < precision) lift_root(state_->root, p_, precision);
  return locator_value(state_->root, p_);
}

PAdicApprox embed(const AlgebraicNumber& x, const PAdicEmbedding& emb, long precision) {
  if (x.field() != emb.field() && !(*x.field() == *emb.field()))
    throw Error(ErrorKind::FieldMismatch, "element and embedding use different fields");
  const Prime& p = emb.prime();
  const auto& c = x.coeffs();
  const long lambda_neg = std::min(emb.root_valuation(), 0L);
  long needed = std::numeric_limits<long>::min();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    needed = std::max(needed, precision - valuation(c[i], p).value() - static_cast<long>(i - 1) * lambda_neg);
  }
  if (needed == std::numeric_limits<long>::min()) return PAdicApprox::from_rational(c[0], p, precision);
  const Rational r = emb.root(std::max(needed, 1L)).representative();
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + *it;
  return PAdicApprox::from_rational(acc, p, precision);
}

Valuation embedded_valuation(const AlgebraicNumber& x, const PAdicEmbedding& emb) {
  if (x.is_zero()) return Valuation::infinity();
  for (long n = 8;; n *= 2) {
    const auto a = embed(x, emb, n);
    if (!a.indistinguishable_from_zero()) return Valuation(a.valuation());
  }
}

}  // namespace pmcf
