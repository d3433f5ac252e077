#pragma once

#include <string_view>

#include "nilzeta/lie_algebra.hpp"

namespace nilzeta {

/// Parses a formal bracket expression over the algebra's generators and
/// returns its normal form.
///
/// Juxtaposition is left-normed: "XYZY" is [[[X,Y],Z],Y]. Parentheses group
/// ("(ZX)(YX)"), "[a,b]" is an explicit bracket, and terms may carry integer
/// or fractional coefficients: "2YZZY + ZYYZ", "-1/12*XYX". Generator names
/// must be single characters. Throws Error(Errc::input) on unknown symbols.
LieElement parse_lie_expression(const AlgebraPtr& algebra, std::string_view text);

}  // namespace nilzeta
