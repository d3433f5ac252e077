#pragma once

#include <json.hpp>

#include "nilzeta/bipoly.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/lie_algebra.hpp"
#include "nilzeta/linalg.hpp"
#include "nilzeta/malcev.hpp"

namespace nilzeta::json {

using Json = nlohmann::ordered_json;

/// {"name", "weight", "multidegree", "ordinal"} per basis element.
Json basis(const LieAlgebra& alg);
/// Nonzero brackets i < j as {"i", "j", "coeffs": [[k, "num/den"], ...]}.
Json tensor(const LieAlgebra& alg);
/// kind, generators, class, basis and tensor.
Json algebra(const LieAlgebra& alg);
/// Algebra export plus complement words, ideal HNF and projection.
Json quotient(const lattice::QuotientLattice& q);

Json element(const LieElement& v);
Json matrix(const RatMatrix& m);
Json matrix(const IntMatrix& m);
Json bch(const malcev::TruncatedBCH& b);
/// [[q-exp, main-exp, "coeff"], ...]
Json poly(const zeta::BiPoly& p);
/// {"variable", "numerator", "denominator", "text", "latex"}
Json rational_function(const zeta::RationalFn& f);

}  // namespace nilzeta::json
