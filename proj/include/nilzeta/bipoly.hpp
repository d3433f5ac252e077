#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilzeta/rational.hpp"

namespace nilzeta::zeta {

/// Second variable: the auxiliary X of the lattice sum, or t = p^-s.
enum class Var { X, t };

const char* var_name(Var v);

/// Sparse integer polynomial in q and one main variable (X or t).
///
/// Terms are keyed (main exponent, q exponent), so iteration order is the
/// lex order with the main variable dominant. Exponents are 64-bit and
/// every exponent operation is overflow-checked.
class BiPoly {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (main, q)

  explicit BiPoly(Var v = Var::t) : var_(v) {}
  static BiPoly constant(const Integer& c, Var v = Var::t);
  static BiPoly monomial(const Integer& c, std::int64_t q_exp, std::int64_t main_exp, Var v = Var::t);

  Var var() const { return var_; }
  /// True when no term involves the main variable (var tag is then irrelevant).
  bool is_main_constant() const;
  BiPoly with_var(Var v) const;

  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer coeff(std::int64_t q_exp, std::int64_t main_exp) const;
  void add_term(const Integer& c, std::int64_t q_exp, std::int64_t main_exp);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest term in the (main, q) lex order.
  std::pair<Key, Integer> leading() const;
  std::int64_t max_q() const;
  std::int64_t max_main() const;
  std::int64_t min_q() const;
  std::int64_t min_main() const;
  Integer content() const;  // positive gcd of coefficients; 0 for the zero polynomial

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly scaled(const Integer& s) const;
  /// Multiply by q^dq main^dm (exponents may be negative if the result stays polynomial).
  BiPoly shifted(std::int64_t dq, std::int64_t dm) const;
  /// Exact division of every coefficient by s; throws if not exact.
  BiPoly divided_by(const Integer& s) const;
  BiPoly pow(unsigned n) const;
  bool operator==(const BiPoly& o) const;

  /// Exact quotient, or nullopt if `d` does not divide this polynomial.
  std::optional<BiPoly> divide_exact(const BiPoly& d) const;

  /// main^k q^j -> q^(j + a k) t^(b k), producing a polynomial in t.
  BiPoly substitute_main(std::int64_t a, std::int64_t b) const;
  /// q^maxq main^maxm * P(1/q, 1/main).
  BiPoly reversed() const;
  /// Terms of main degree <= n.
  BiPoly truncated(std::int64_t n) const;
  /// Coefficient of main^k as a polynomial in q (main exponent 0).
  BiPoly main_coefficient(std::int64_t k) const;
  /// Value at q = v, as a polynomial in the main variable only.
  BiPoly specialize_q(const Integer& v) const;

  /// "1 + q^285*t^102 + 2*q^286*t^102"
  std::string to_string() const;
  /// "1 + p^{285-102s} + 2p^{286-102s}" (t) or "1 + X^{3} + 2pX^{3}" (X)
  std::string to_latex() const;

 private:
  void check_compatible(const BiPoly& o);

  Var var_;
  std::map<Key, Integer> terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// num / den with den != 0, normalized: common monomials and the known
/// small factors cancelled, content removed, leading coefficient of den
/// positive.
class RationalFn {
 public:
  RationalFn() : num_(BiPoly::constant(0)), den_(BiPoly::constant(1)) {}
  RationalFn(BiPoly num, BiPoly den);
  explicit RationalFn(BiPoly poly);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  Var var() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn operator-() const;
  RationalFn pow(int n) const;
  /// Cross-multiplication equality.
  bool operator==(const RationalFn& o) const;

  /// Power series in the main variable up to degree n; requires the
  /// denominator's main-constant part to be +-1.
  BiPoly series(std::int64_t n) const;

  /// Denominator split into known factors where possible, for display.
  std::vector<BiPoly> denominator_factors() const;
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize();
  BiPoly num_, den_;
};

/// Factors tried during normalization: 1 - X^3, 1 - q^3 X^6 and their
/// images 1 - q^285 t^102, 1 - q^573 t^204, plus 1 - t and 1 - q t.
const std::vector<BiPoly>& known_factors();

/// Parses expressions such as "1/((1-t)*(1-q*t))" or "2*q^2*X^6 + 1".
/// Integers, q, t, X, + - * / ^ (nonnegative integer powers), parentheses.
RationalFn parse_rational_function(const std::string& text);

}  // namespace nilzeta::zeta
