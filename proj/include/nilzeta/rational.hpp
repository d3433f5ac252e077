#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>

namespace nilzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

/// ord_p of a nonzero rational, kInfiniteValuation for zero.
int valuation(const Rational& x, unsigned long p);
int valuation(const Integer& x, unsigned long p);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }
bool is_p_integral(const Rational& x, unsigned long p);

bool is_prime(unsigned long n);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// "num/den" always, for the JSON schemas.
std::string to_json_string(const Rational& x);
/// Compact text form: "3", "-1/12".
std::string to_text(const Rational& x);
/// Accepts "n", "-n", "n/d".
Rational parse_rational(const std::string& s);

}  // namespace nilzeta
