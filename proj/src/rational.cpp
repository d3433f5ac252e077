#include "nilzeta/rational.hpp"

#include "nilzeta/error.hpp"

namespace nilzeta {

int valuation(const Integer& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  Integer t = x;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

bool is_p_integral(const Rational& x, unsigned long p) {
  return !mpz_divisible_ui_p(x.get_den_mpz_t(), p);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    require(base != 0, Errc::input, "negative power of zero");
    return rpow(Rational(1) / base, -exp);
  }
  Rational r(ipow(Integer(base.get_num()), static_cast<unsigned long>(exp)),
             ipow(Integer(base.get_den()), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

std::string to_json_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_text(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    fail(Errc::input, "not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace nilzeta
