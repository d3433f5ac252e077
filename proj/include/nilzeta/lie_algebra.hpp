#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilzeta/rational.hpp"

namespace nilzeta {

/// Sparse coefficient vector over an ordered basis; never stores zeros.
using Coeffs = std::map<std::size_t, Rational>;

void add_scaled(Coeffs& acc, const Coeffs& v, const Rational& s);

/// One basis element of a nilpotent Lie algebra with a chosen basis.
///
/// Every element of weight >= 2 is recorded as the bracket of two earlier
/// basis elements (`factors`), which is what lets endomorphisms be extended
/// from generator images.
struct BasisEntry {
  std::string name;
  int weight = 1;
  std::vector<int> multidegree;
  std::optional<int> generator;                          // weight-1 entries
  std::optional<std::pair<std::size_t, std::size_t>> factors;  // weight >= 2
};

/// A finite-dimensional nilpotent Lie ring over Z, given by an ordered basis
/// and integer structure constants. Immutable once constructed.
class LieAlgebra {
 public:
  LieAlgebra(std::string kind, std::vector<std::string> generator_names,
             std::vector<BasisEntry> basis, std::vector<Coeffs> tensor, int nilpotency_class);

  const std::string& kind() const { return kind_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t generator_count() const { return generator_names_.size(); }
  int nilpotency_class() const { return class_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const BasisEntry& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  std::size_t generator_ordinal(std::size_t g) const { return generator_ordinals_.at(g); }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Normal form of [e_i, e_j].
  const Coeffs& structure(std::size_t i, std::size_t j) const {
    return tensor_[i * basis_.size() + j];
  }
  Coeffs bracket(const Coeffs& a, const Coeffs& b) const;

 private:
  std::string kind_;
  std::vector<std::string> generator_names_;
  std::vector<BasisEntry> basis_;
  std::vector<Coeffs> tensor_;
  std::vector<std::size_t> generator_ordinals_;
  std::map<std::string, std::size_t> by_name_;
  int class_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// An element of a LieAlgebra with exact rational coordinates.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  LieElement(AlgebraPtr algebra, Coeffs coeffs);

  static LieElement basis(AlgebraPtr algebra, std::size_t ordinal);
  static LieElement generator(AlgebraPtr algebra, std::size_t g);
  static LieElement from_dense(AlgebraPtr algebra, const std::vector<Rational>& coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rational coefficient(std::size_t ordinal) const;
  std::vector<Rational> dense() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  bool is_p_integral(unsigned long p) const;
  /// Minimum ord_p over the coordinates (kInfiniteValuation for zero).
  int min_valuation(unsigned long p) const;
  /// True when every nonzero term has weight >= w.
  bool in_weight_at_least(int w) const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
  LieElement operator-() const;
  bool operator==(const LieElement& o) const;

  std::string to_string() const;

 private:
  void check_same(const LieElement& o) const;

  AlgebraPtr algebra_;
  Coeffs coeffs_;
};

LieElement bracket(const LieElement& a, const LieElement& b);
/// Left-normed bracket [[[a0,a1],a2],...].
LieElement left_normed(const std::vector<LieElement>& factors);

}  // namespace nilzeta
