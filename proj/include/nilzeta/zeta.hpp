#pragma once

#include <optional>
#include <string>

#include "nilzeta/bipoly.hpp"

namespace nilzeta::zeta {

enum class Residues {
  all,    // every (i, j) with 3 | i + j
  equal,  // i = j = 0 mod 3
  mixed,  // {i, j} = {1, 2} mod 3
};

/// Sum over i, j >= 0, 3 | (i + j), i + j <= D of q^min(i,j) X^(i+j).
BiPoly lattice_sum_truncated(int D, Residues which = Residues::all);

/// (1 + X^3 + 2 q X^3 + 2 q^2 X^6) / ((1 - X^3)(1 - q^3 X^6))
RationalFn closed_form();
/// (1 + X^3) / ((1 - X^3)(1 - q^3 X^6)): the i = j = 0 mod 3 part.
RationalFn piece_equal();
/// (2 q X^3 + 2 q^2 X^6) / ((1 - X^3)(1 - q^3 X^6)): the mixed-residue part.
RationalFn piece_mixed();

/// Sum over valuation triples with vb + vc <= D of
/// q^(theta_1 + theta_2 + theta_3) t^det.
BiPoly integral_series_from_theta(int D);

/// X -> q^95 t^34.
RationalFn substitute_to_zeta(const RationalFn& rf);
BiPoly substitute_to_zeta(const BiPoly& poly);

/// The stated local factor, built directly:
/// (1 + q^285 t^102 + 2 q^286 t^102 + 2 q^572 t^204) / ((1 - q^285 t^102)(1 - q^573 t^204)).
RationalFn stated_zeta();

struct FunctionalEquation {
  int a = 0;        // sign (-1)^a
  std::int64_t b = 0;  // Z(1/q, 1/t) = (-1)^a q^b t^c Z(q, t)
  std::int64_t c = 0;
};

/// Returns (a, b, c) iff Z(1/q, 1/t) / Z(q, t) = (-1)^a q^b t^c.
std::optional<FunctionalEquation> functional_equation_test(const RationalFn& z);

/// Multiplies by s * q^alpha t^beta, alpha, beta >= 0.
RationalFn times_monomial(const RationalFn& z, const Integer& s, std::int64_t alpha, std::int64_t beta);

}  // namespace nilzeta::zeta
