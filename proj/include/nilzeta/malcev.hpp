#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nilzeta/free_lie.hpp"
#include "nilzeta/lie_algebra.hpp"

namespace nilzeta::malcev {

struct BchTerm {
  std::size_t hall_ordinal = 0;
  std::string hall_name;     // e.g. "YXXY"
  Rational hall_coefficient;
  std::string display_name;  // X-led left-normed form, e.g. "XYXY"
  Rational display_coefficient;
  int degree = 1;
};

/// log(exp X * exp Y) up to degree c, in the Hall basis of F(2, c).
struct TruncatedBCH {
  int c = 0;
  std::shared_ptr<const free_lie::FreeNilpotentAlgebra> free;
  LieElement series;
  std::vector<BchTerm> terms;
  Integer m;  // lcm of coefficient denominators

  std::string to_string() const;  // "X + Y + 1/2*XY - ..."
};

/// Computed in the degree-truncated free associative algebra on two letters
/// and projected onto the Hall basis by an exact linear solve.
TruncatedBCH bch_truncated(int c);

/// Phi_c(u, v) evaluated in u's algebra. Requires class(algebra) <= c.
LieElement phi(const TruncatedBCH& bch, const LieElement& u, const LieElement& v);

class MalcevGroup;

/// An element of (m L, *), stored by its unscaled L-coordinates.
class GroupElement {
 public:
  const LieElement& coords() const { return v_; }
  bool operator==(const GroupElement& o) const { return v_ == o.v_; }

 private:
  friend class MalcevGroup;
  explicit GroupElement(LieElement v) : v_(std::move(v)) {}
  LieElement v_;
};

/// The group exp(m L) with x * y = Phi_c(x, y).
class MalcevGroup {
 public:
  MalcevGroup(AlgebraPtr algebra, int c);

  const AlgebraPtr& algebra() const { return alg_; }
  const TruncatedBCH& bch() const { return bch_; }
  const Integer& scale() const { return bch_.m; }

  bool contains(const LieElement& v) const;
  /// Throws Error(input) unless v lies in m L.
  GroupElement element(const LieElement& v) const;
  GroupElement identity() const;

  /// Throws Error(invariant) if the product leaves m L.
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// a^-1 b^-1 a b
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
  /// Left-normed group commutator (((a1,a2),a3),...).
  GroupElement iterated_commutator(const std::vector<GroupElement>& xs) const;

 private:
  GroupElement checked(LieElement v) const;

  AlgebraPtr alg_;
  TruncatedBCH bch_;
};

struct CommutatorComparison {
  LieElement group_value;
  LieElement lie_value;
  bool equal = false;
};

CommutatorComparison group_commutator_vs_lie(const MalcevGroup& g, const std::vector<GroupElement>& xs);

struct CongruenceReport {
  unsigned long p = 0;
  int k = 0;
  std::vector<int> sum_valuations;        // per coordinate of Phi(p^k u, p^k v) - p^k (u+v)
  std::vector<int> commutator_valuations; // per coordinate of (p^k u, p^k v) - p^2k [u, v]
  int min_sum = kInfiniteValuation;
  int min_commutator = kInfiniteValuation;
  bool ok = false;  // min_sum >= 2k and min_commutator >= 3k
};

/// Finite-k congruences behind recovering + and [,] as p-adic limits of the
/// group operations. Requires p > 3 (Errc::unsupported otherwise).
CongruenceReport limit_congruence(const TruncatedBCH& bch, const LieElement& u, const LieElement& v, int k,
                                  unsigned long p);

struct CosetReport {
  std::size_t samples = 0;
  std::size_t forward_failures = 0;   // x * p^k w not in x + p^k L
  std::size_t backward_failures = 0;  // (-x) * (x + p^k w) not in p^k L
  bool ok() const { return forward_failures == 0 && backward_failures == 0; }
};

/// Sampled check that the Lie coset x + p^k L equals the group coset
/// x * (p^k L): both inclusions on `samples` random w with coordinates in
/// [0, p^K). Requires p > 3.
CosetReport coset_check(const TruncatedBCH& bch, const LieElement& x, int k, int K, unsigned long p,
                        std::size_t samples, std::uint64_t seed);

}  // namespace nilzeta::malcev
