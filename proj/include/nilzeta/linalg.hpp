#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilzeta/rational.hpp"

namespace nilzeta {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Integer>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> row_times(const std::vector<Rational>& v, const RatMatrix& m);
Rational determinant(RatMatrix m);
std::size_t rank(RatMatrix m);
/// Inverse, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Solves x * A = b for a row vector x (A has one row per unknown).
/// Returns nullopt when inconsistent; free unknowns are set to 0.
std::optional<std::vector<Rational>> solve_left(const RatMatrix& a, const std::vector<Rational>& b);

RatMatrix to_rational(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
IntMatrix to_integer(const RatMatrix& m);

/// Row-style Hermite normal form of the Z-row-span of `rows`.
///
/// Output rows are nonzero with strictly increasing pivot columns, positive
/// pivots, and entries above each pivot reduced into [0, pivot). Unique for a
/// given row space.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// Reduces v against an HNF; returns the remainder (zero iff v lies in the
/// row span).
std::vector<Integer> hnf_reduce(const IntMatrix& hnf, std::vector<Integer> v);

}  // namespace nilzeta
