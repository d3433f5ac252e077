#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilzeta/free_lie.hpp"
#include "nilzeta/lie_algebra.hpp"
#include "nilzeta/linalg.hpp"

namespace nilzeta::lattice {

/// A Lie ideal of an integral Lie lattice, stored as the Hermite normal form
/// of its Z-basis in ambient coordinates.
class LieIdeal {
 public:
  LieIdeal(AlgebraPtr ambient, std::vector<LieElement> generators, IntMatrix hnf);

  const AlgebraPtr& ambient() const { return ambient_; }
  const std::vector<LieElement>& generators() const { return generators_; }
  const IntMatrix& basis() const { return hnf_; }
  std::size_t rank() const { return hnf_.size(); }
  std::vector<LieElement> basis_elements() const;
  bool contains(const LieElement& v) const;

 private:
  AlgebraPtr ambient_;
  std::vector<LieElement> generators_;
  IntMatrix hnf_;
};

/// Smallest bracket-closed Z-submodule containing the generators: rows are
/// bracketed with every ambient basis element until the HNF stops changing.
LieIdeal ideal_closure(const AlgebraPtr& ambient, const std::vector<LieElement>& generators);

/// HNF of the plain Z-span of the given integral elements (no closure).
IntMatrix integer_span(const AlgebraPtr& ambient, const std::vector<LieElement>& elements);

bool membership(const LieIdeal& ideal, const LieElement& v);

/// F/I with a fixed complement basis of left-normed words.
class QuotientLattice {
 public:
  QuotientLattice(std::shared_ptr<const free_lie::FreeNilpotentAlgebra> free, LieIdeal ideal,
                  std::vector<std::string> complement_words);

  const free_lie::FreeNilpotentAlgebra& free() const { return *free_; }
  const AlgebraPtr& ambient() const { return free_->algebra(); }
  const LieIdeal& ideal() const { return ideal_; }
  const std::vector<std::string>& complement_words() const { return words_; }
  /// Row k: ambient coordinates of the representative of quotient basis k.
  const IntMatrix& complement() const { return complement_; }
  /// ambient dimension x rank; integral because the complement is unimodular.
  const IntMatrix& projection() const { return projection_; }
  /// Determinant of [complement; ideal basis], +-1.
  const Integer& complement_determinant() const { return det_; }
  const AlgebraPtr& algebra() const { return quotient_; }
  std::size_t rank() const { return quotient_->dimension(); }

  LieElement project(const LieElement& ambient_element) const;
  LieElement lift(const LieElement& quotient_element) const;
  /// Parses a bracket expression in the quotient's generators (x, y, z).
  LieElement element(const std::string& expr) const;
  LieElement basis_element(const std::string& name) const;

 private:
  std::shared_ptr<const free_lie::FreeNilpotentAlgebra> free_;
  LieIdeal ideal_;
  std::vector<std::string> words_;
  IntMatrix complement_;
  IntMatrix projection_;
  Integer det_;
  AlgebraPtr quotient_;
};

/// The 25 left-normed complement words x, y, z, xy, ..., xzyz in display order.
const std::vector<std::string>& lambda_basis_words();

/// The defining relations YXXX - YZY and ZXXX - ZYZ in F(3,4).
std::vector<LieElement> lambda_relations(const free_lie::FreeNilpotentAlgebra& f);

/// The seven listed ideal basis elements R1, R2, YZYX, ZYZX, YZYY, YZYZ, ZYZZ.
std::vector<LieElement> listed_ideal_basis(const free_lie::FreeNilpotentAlgebra& f);

/// Builds F(3,4), closes the ideal of the two relations and forms the
/// rank-25 quotient. Throws Error(invariant) if the complement is not
/// unimodular.
QuotientLattice build_lambda();

/// Ranks of gamma_1, gamma_2, ..., gamma_{c+1} (last one 0 for class c).
std::vector<std::size_t> lower_central_ranks(const AlgebraPtr& alg);
/// Successive quotient ranks gamma_i / gamma_{i+1}.
std::vector<std::size_t> graded_ranks(const AlgebraPtr& alg);

struct SameWeightRow {
  std::string word;
  LieElement value;
  bool integral = true;
  bool same_multidegree = true;
};

struct SameWeightReport {
  std::vector<SameWeightRow> rows;
  std::size_t violations() const;
};

/// Every left-normed word of length 4 in the generators, expanded in the
/// quotient basis, must use only basis elements of the word's multidegree
/// with integer coefficients.
SameWeightReport same_weight_check(const QuotientLattice& q);

/// Multidegree of a word over the generator letters.
std::vector<int> word_multidegree(const std::string& word, const std::vector<std::string>& generator_names);

}  // namespace nilzeta::lattice
