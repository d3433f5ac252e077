#pragma once

#include <cstdint>
#include <random>

#include "nilzeta/lie_algebra.hpp"

namespace nilzeta {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Deterministic source of small integers and algebra elements.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long lo, long hi, long max_den) {
    long num = integer(lo, hi);
    long den = integer(1, max_den);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  /// Integral element with coordinates in [lo, hi], times `scale`.
  LieElement element(const AlgebraPtr& alg, long lo, long hi, const Integer& scale = 1) {
    std::vector<Rational> c(alg->dimension());
    for (auto& x : c) x = Rational(Integer(integer(lo, hi)) * scale);
    return LieElement::from_dense(alg, c);
  }

  /// Integral element supported on basis elements of weight >= w.
  LieElement element_of_weight_at_least(const AlgebraPtr& alg, int w, long lo, long hi,
                                        const Integer& scale = 1) {
    std::vector<Rational> c(alg->dimension());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (alg->basis(k).weight >= w) c[k] = Rational(Integer(integer(lo, hi)) * scale);
    return LieElement::from_dense(alg, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nilzeta
