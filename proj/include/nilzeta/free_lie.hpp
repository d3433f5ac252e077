#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilzeta/lie_algebra.hpp"
#include "nilzeta/linalg.hpp"

namespace nilzeta::free_lie {

struct Generator {
  int index = 0;
  std::string name;
};

/// A basic commutator of the Hall collection process.
///
/// Leaves carry a generator; pairs refer to their factors by ordinal in the
/// same Hall list, so `left > right` and (for a pair left) `left.right <= right`
/// are integer comparisons.
struct BasicCommutator {
  std::size_t ordinal = 0;
  int weight = 1;
  std::vector<int> multidegree;
  int generator = -1;  // >= 0 for leaves
  std::size_t left = 0;
  std::size_t right = 0;

  bool is_leaf() const { return generator >= 0; }
};

/// Default display names: X, Y, Z for n <= 3, otherwise A, B, C, ...
std::vector<Generator> default_generators(int n);

/// Basic elements of weight <= c on n generators in Hall order: weight first,
/// then (ordinal of left factor, ordinal of right factor) lexicographically.
std::vector<BasicCommutator> hall_basis(int n, int c);

/// Display name: left-normed juxtaposition ("YXXZ"), with parentheses
/// around composite right factors ("(ZX)(YX)").
std::string commutator_name(const std::vector<BasicCommutator>& basis, std::size_t ordinal,
                            const std::vector<Generator>& gens);

/// Free nilpotent Lie ring of class c on n generators with its Hall basis.
class FreeNilpotentAlgebra {
 public:
  FreeNilpotentAlgebra(int n, int c);
  FreeNilpotentAlgebra(int n, int c, std::vector<std::string> generator_names);

  int generator_count() const { return n_; }
  int nilpotency_class() const { return c_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<BasicCommutator>& hall() const { return hall_; }
  const AlgebraPtr& algebra() const { return algebra_; }

  /// Normal form of a formal bracket expression.
  LieElement normal_form(const std::string& expr) const;
  LieElement generator(std::size_t g) const { return LieElement::generator(algebra_, g); }

 private:
  int n_;
  int c_;
  std::vector<Generator> gens_;
  std::vector<BasicCommutator> hall_;
  AlgebraPtr algebra_;
};

/// Change of basis between the Hall basis of F(3,4) and the X-led
/// left-normed basis
///   X, Y, Z, XY, XZ, YZ, XYY, ..., XYYZ, XZZY, YZYY, YZYZ, ZYZZ.
struct LeftNormedBasis {
  std::vector<std::string> words;
  IntMatrix to_hall;    // row k: Hall coordinates of words[k]
  IntMatrix from_hall;  // row i: word coordinates of Hall element i
};

/// The 32 X-led left-normed basis words of F(3,4), in display order.
const std::vector<std::string>& left_normed_words_3_4();

/// Builds the change of basis; throws Error(invariant) unless unimodular.
LeftNormedBasis left_normed_basis(const FreeNilpotentAlgebra& f);

/// Coordinates of v in the left-normed basis.
std::vector<Rational> to_left_normed(const LeftNormedBasis& b, const LieElement& v);

struct RewriteFailure {
  std::string identity;
  std::string lhs;
  std::string rhs;
};

struct RewriteReport {
  std::size_t pqrs_checked = 0;
  std::size_t base_change_checked = 0;
  std::vector<RewriteFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks PQRS = PSQR + SQPR + RSQP + SRPQ over all substitutions from the
/// generators, and the three non-left-normed Hall elements' rewrites.
RewriteReport verify_rewrite_identities(const FreeNilpotentAlgebra& f);

struct StructureCheck {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Antisymmetry, Jacobi, grading and integrality over all basis pairs/triples.
StructureCheck check_structure(const LieAlgebra& alg, bool expect_graded);

/// Dimensions of the weight-w layers, w = 1..c.
std::vector<std::size_t> graded_dimensions(const LieAlgebra& alg);

}  // namespace nilzeta::free_lie
