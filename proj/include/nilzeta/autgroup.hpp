#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilzeta/lattice.hpp"
#include "nilzeta/lie_algebra.hpp"
#include "nilzeta/linalg.hpp"

namespace nilzeta::aut {

/// Row-vector convention: row k of the matrix is the image of basis k.
using AutMatrix = RatMatrix;

struct GeneratorImages {
  std::vector<LieElement> images;  // one per generator, in generator order
};

/// The unique bracket-compatible linear extension of the generator images.
/// Rows of composite basis elements are brackets of their factor rows.
/// Throws Error(input) if the result does not preserve all basis brackets
/// (the images do not define an endomorphism of this algebra), and
/// Error(singular) when `require_invertible` is set and the linear part is
/// singular.
AutMatrix extend_endomorphism(const AlgebraPtr& alg, const GeneratorImages& images,
                              bool require_invertible = false);

/// Exact check that [e_i g, e_j g] = [e_i, e_j] g for all i < j.
bool preserves_brackets(const AlgebraPtr& alg, const AutMatrix& g);

/// Image of v under g.
LieElement apply(const AutMatrix& g, const LieElement& v);

/// a, b, c with a^3 = b c.
struct TorusElement {
  Rational a, b, c;
  TorusElement(Rational a_, Rational b_, Rational c_);
};

GeneratorImages torus_images(const AlgebraPtr& alg, const TorusElement& t);
AutMatrix torus_matrix(const AlgebraPtr& alg, const TorusElement& t);
/// Diagonal entry predicted for basis k: a^da b^db c^dc by multidegree.
Rational torus_eigenvalue(const AlgebraPtr& alg, const TorusElement& t, std::size_t k);

/// X -> X, Y -> Z, Z -> Y.
GeneratorImages swap_images(const AlgebraPtr& alg);
/// Generator permutation images X -> X_{perm[0]}, ...
GeneratorImages permutation_images(const AlgebraPtr& alg, const std::array<int, 3>& perm);

/// Ideal invariance of an endomorphism of F: every ideal basis row maps into
/// the Q-span of the ideal.
bool descends_to_quotient(const lattice::QuotientLattice& q, const AutMatrix& endo_of_f);

/// Parameters of the first three rows of a unipotent element of Aut(Lambda).
struct UnipotentParams {
  static constexpr std::size_t kDeltaColumns = 19;  // columns 7..25
  static constexpr std::size_t kCount = 6 + 3 * kDeltaColumns;

  std::array<Rational, 3> alpha;
  Rational upsilon, sigma, tau;
  std::array<std::array<Rational, kDeltaColumns>, 3> delta;  // delta[i][j - 7]

  /// Flat access in the order alpha1..3, upsilon, sigma, tau, delta_1,7..25,
  /// delta_2,7..25, delta_3,7..25.
  Rational& at(std::size_t idx);
  const Rational& at(std::size_t idx) const;
  static std::string name(std::size_t idx);
  bool operator==(const UnipotentParams& o) const;
};

/// x -> x + U, y -> y + upsilon xy + sigma yz + V, z -> z + upsilon xz + tau yz + W
/// on Lambda, extended and checked to be an automorphism.
AutMatrix unipotent_matrix(const lattice::QuotientLattice& q, const UnipotentParams& params);

/// Reads the parameters back from rows x, y, z. Throws Error(input) if the
/// rows do not have the unipotent pattern.
UnipotentParams params_from_rows(const AutMatrix& g);

/// Rows x, y, z are p-integral.
bool is_integral_by_generators(const AlgebraPtr& alg, const AutMatrix& g, unsigned long p);
bool is_p_integral(const AutMatrix& g, unsigned long p);

struct CoefficientCheck {
  std::array<Rational, 4> direct;   // xyy, xzz, xyx, xzx coefficients of (zyz)alpha mod gamma_4
  std::array<Rational, 4> formula;  // the 2x2 determinant expressions
  bool match = false;
};

/// Expands [[z', y'], z'] in Lambda for the linear part A (3x3, rows are the
/// images of x, y, z) and compares against the closed formulas.
CoefficientCheck coefficient_constraints_check(const lattice::QuotientLattice& q, const RatMatrix& a);

struct RelationImageCheck {
  LieElement r1_image, r1_expected;
  LieElement r2_image, r2_expected;
  bool ok() const { return r1_image == r1_expected && r2_image == r2_expected; }
};

/// Applies an element of the M-form (including random higher corrections
/// u, v, w of the allowed weights) to R1 and R2 in F and compares with
/// R1 + upsilon YZYX + sigma ZYZY + tau YZYY and
/// R2 + upsilon ZYZX - tau YZYZ - sigma ZYZZ.
RelationImageCheck relation_images(const lattice::QuotientLattice& q, const Rational& upsilon, const Rational& sigma,
                                const Rational& tau, const LieElement& u, const LieElement& v,
                                const LieElement& w);

using Matrix3 = std::array<long, 9>;  // row-major, entries in [0, q)

struct FiniteFieldClassification {
  unsigned long q = 0;
  std::uint64_t enumerated = 0;    // |GL3(F_q)|
  std::uint64_t passed_prune = 0;  // survivors of the weight-3 filter
  std::vector<Matrix3> realizable;
  std::vector<Matrix3> predicted;  // torus with a^3 = bc, and its y<->z swap
  bool matches_prediction = false;
};

/// For each A in GL3(F_q), decides whether some lift
/// x -> x', y -> y' + c_y, z -> z' + c_z (c in the weight-2 layer) keeps
/// R1 and R2 in the ideal mod q. Requires q prime and q > 3.
FiniteFieldClassification finite_field_classification(const lattice::QuotientLattice& q, unsigned long order,
                                                       unsigned workers = 1);

struct ConjugationCheck {
  bool unipotent = false;    // h^-1 n h has the unipotent pattern
  bool scaled = false;       // its parameters are the monomial-ratio rescaling
  bool determined = false;   // rebuilding from the first three rows reproduces it
  bool ok() const { return unipotent && scaled && determined; }
};

ConjugationCheck semidirect_check(const lattice::QuotientLattice& q, const TorusElement& h,
                                  const UnipotentParams& n);

/// Parameters multiplied by eig(column) / eig(row).
UnipotentParams conjugate_params(const lattice::QuotientLattice& q, const TorusElement& h,
                                 const UnipotentParams& n);

/// Basis ordinal of the column that parameter idx occupies in row x, y or z;
/// upsilon is reported at its row-y position (xy).
std::size_t param_column(std::size_t idx);
std::size_t param_row(std::size_t idx);

}  // namespace nilzeta::aut
