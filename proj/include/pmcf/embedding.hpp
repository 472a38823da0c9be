#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "pmcf/approx.hpp"
#include "pmcf/number_field.hpp"

namespace pmcf {

/// How a simple p-adic root of a minimal polynomial was isolated:
///   root = p^lambda * (shift + p^depth * z),  H(z) = 0,  H'(z) a unit,
/// where H is the primitive integer polynomial left after the Newton-polygon
/// rescaling and `depth` residue substitutions. z is known mod p^z_precision.
struct RootLocator {
  long lambda = 0;
  Integer shift = 0;
  long depth = 0;
  std::vector<Integer> h;
  Integer z = 0;
  long z_precision = 1;

  long absolute_precision() const noexcept { return lambda + depth + z_precision; }
};

/// Doubles z_precision (Newton step) until the absolute precision reaches target.
void lift_root(RootLocator& loc, const Prime& p, long target_precision);

PAdicApprox locator_value(const RootLocator& loc, const Prime& p);

/// Roots of the minimal polynomial lying in Q_p, each located and lifted to
/// absolute precision >= precision. Throws LiftingObstruction when a
/// repeated residue cannot be separated.
std::vector<RootLocator> locate_padic_roots(const Polynomial& f, const Prime& p, long precision);

/// Same roots as approximations with precision exactly N.
std::vector<PAdicApprox> padic_roots(const NumberField& field, const Prime& p, long precision);

/// The unique root of maximal p-adic norm. NoRoot / AmbiguousSelection.
PAdicApprox select_largest_root(const std::vector<PAdicApprox>& roots);

/// Newton polygon segments of f as (slope numerator, slope denominator, length)
/// in lowest terms; slope s means roots of valuation -s.
struct NewtonSegment {
  long rise;
  long run;
  long length;
};
std::vector<NewtonSegment> newton_polygon(const Polynomial& f, const Prime& p);

/// A field embedding Q(theta) -> Q_p given by a chosen root. Copies share the
/// cached root; refinement is serialized internally.
class PAdicEmbedding {
 public:
  PAdicEmbedding(FieldPtr field, const Prime& p, RootLocator root);

  /// Embedding via the root of largest p-adic norm ("root largest in modulo").
  static PAdicEmbedding largest_root(FieldPtr field, const Prime& p, long precision = 32);

  const FieldPtr& field() const noexcept { return field_; }
  const Prime& prime() const noexcept { return p_; }
  long root_valuation() const noexcept;
  long achieved_precision() const;
  PAdicApprox root() const;
  /// Root approximation with at least the requested precision.
  PAdicApprox root(long precision) const;

 private:
  struct State {
    std::mutex mutex;
    RootLocator root;
  };

  FieldPtr field_;
  Prime p_;
  std::shared_ptr<State> state_;
};

/// x evaluated at the embedded root, correct modulo p^precision.
PAdicApprox embed(const AlgebraicNumber& x, const PAdicEmbedding& emb, long precision);

/// Exact valuation of a nonzero algebraic number under the embedding
/// (+infinity for zero).
Valuation embedded_valuation(const AlgebraicNumber& x, const PAdicEmbedding& emb);

}  // namespace pmcf
