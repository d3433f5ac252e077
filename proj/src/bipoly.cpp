#include "nilzeta/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta::zeta {

const char* var_name(Var v) { return v == Var::X ? "X" : "t"; }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  require(!__builtin_add_overflow(a, b, &r), Errc::input, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  require(!__builtin_mul_overflow(a, b, &r), Errc::input, "exponent overflow");
  return r;
}

BiPoly BiPoly::constant(const Integer& c, Var v) {
  BiPoly p(v);
  p.add_term(c, 0, 0);
  return p;
}

BiPoly BiPoly::monomial(const Integer& c, std::int64_t q_exp, std::int64_t main_exp, Var v) {
  BiPoly p(v);
  p.add_term(c, q_exp, main_exp);
  return p;
}

bool BiPoly::is_main_constant() const {
  return terms_.empty() || (terms_.begin()->first.first == 0 && terms_.rbegin()->first.first == 0);
}

BiPoly BiPoly::with_var(Var v) const {
  BiPoly p = *this;
  p.var_ = v;
  return p;
}

Integer BiPoly::coeff(std::int64_t q_exp, std::int64_t main_exp) const {
  auto it = terms_.find({main_exp, q_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::add_term(const Integer& c, std::int64_t q_exp, std::int64_t main_exp) {
  require(q_exp >= 0 && main_exp >= 0, Errc::input, "negative exponent in a polynomial");
  if (c == 0) return;
  Key k{main_exp, q_exp};
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<BiPoly::Key, Integer> BiPoly::leading() const {
  require(!terms_.empty(), Errc::input, "leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::int64_t BiPoly::max_q() const {
  std::int64_t m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

std::int64_t BiPoly::max_main() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

std::int64_t BiPoly::min_q() const {
  if (terms_.empty()) return 0;
  std::int64_t m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

std::int64_t BiPoly::min_main() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }

Integer BiPoly::content() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void BiPoly::check_compatible(const BiPoly& o) {
  if (var_ == o.var_) return;
  if (o.is_main_constant()) return;
  require(is_main_constant(), Errc::input,
          std::string("cannot combine polynomials in ") + var_name(var_) + " and " + var_name(o.var_));
  var_ = o.var_;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(c, k.second, k.first);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(-c, k.second, k.first);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.var_);
  out.check_compatible(b);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ca * cb, checked_add(ka.second, kb.second), checked_add(ka.first, kb.first));
  return out;
}

BiPoly BiPoly::operator-() const { return scaled(-1); }

BiPoly BiPoly::scaled(const Integer& s) const {
  BiPoly out(var_);
  if (s == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

BiPoly BiPoly::shifted(std::int64_t dq, std::int64_t dm) const {
  BiPoly out(var_);
  for (const auto& [k, c] : terms_) out.add_term(c, checked_add(k.second, dq), checked_add(k.first, dm));
  return out;
}

BiPoly BiPoly::divided_by(const Integer& s) const {
  require(s != 0, Errc::input, "division by zero");
  BiPoly out(var_);
  for (const auto& [k, c] : terms_) {
    require(mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()) != 0, Errc::invariant, "inexact content division");
    out.terms_.emplace(k, Integer(c / s));
  }
  return out;
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly out = constant(1, var_), base = *this;
  while (n > 0) {
    if (n & 1u) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (terms_ != o.terms_) return false;
  return var_ == o.var_ || is_main_constant();
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const {
  require(!d.is_zero(), Errc::input, "division by the zero polynomial");
  BiPoly rem = *this, quot(var_);
  quot.check_compatible(d);
  rem.check_compatible(d);
  const auto [dk, dc] = d.leading();
  while (!rem.is_zero()) {
    auto [rk, rc] = rem.leading();
    if (rk.first < dk.first || rk.second < dk.second) return std::nullopt;
    if (mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()) == 0) return std::nullopt;
    Integer f = rc / dc;
    BiPoly m = monomial(f, rk.second - dk.second, rk.first - dk.first, rem.var_);
    quot += m;
    rem -= m * d;
  }
  return quot;
}

BiPoly BiPoly::substitute_main(std::int64_t a, std::int64_t b) const {
  BiPoly out(Var::t);
  for (const auto& [k, c] : terms_)
    out.add_term(c, checked_add(k.second, checked_mul(a, k.first)), checked_mul(b, k.first));
  return out;
}

BiPoly BiPoly::reversed() const {
  BiPoly out(var_);
  std::int64_t mq = max_q(), mm = max_main();
  for (const auto& [k, c] : terms_) out.add_term(c, mq - k.second, mm - k.first);
  return out;
}

BiPoly BiPoly::truncated(std::int64_t n) const {
  BiPoly out(var_);
  for (const auto& [k, c] : terms_)
    if (k.first <= n) out.terms_.emplace(k, c);
  return out;
}

BiPoly BiPoly::main_coefficient(std::int64_t k) const {
  BiPoly out(var_);
  for (auto it = terms_.lower_bound({k, 0}); it != terms_.end() && it->first.first == k; ++it)
    out.add_term(it->second, it->first.second, 0);
  return out;
}

BiPoly BiPoly::specialize_q(const Integer& v) const {
  BiPoly out(var_);
  for (const auto& [k, c] : terms_) {
    require(k.second < (1 << 20), Errc::input, "q exponent too large to specialize");
    out.add_term(c * ipow(v, static_cast<unsigned long>(k.second)), 0, k.first);
  }
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Integer& c, const std::string& body) {
  Integer mag = abs(c);
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  if (body.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << "*";
    os << body;
  }
}

std::string power(const char* name, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string q = power("q", k.second), m = power(var_name(var_), k.first);
    std::string body = q.empty() ? m : (m.empty() ? q : q + "*" + m);
    append_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

std::string BiPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body;
    if (var_ == Var::t) {
      auto [m, q] = k;
      if (m == 0 && q != 0)
        body = q == 1 ? "p" : "p^{" + std::to_string(q) + "}";
      else if (m != 0)
        body = "p^{" + (q != 0 ? std::to_string(q) : std::string()) + "-" + (m == 1 ? "" : std::to_string(m)) + "s}";
    } else {
      auto [m, q] = k;
      if (q == 1) body += "p";
      if (q > 1) body += "p^{" + std::to_string(q) + "}";
      if (m == 1) body += "X";
      if (m > 1) body += "X^{" + std::to_string(m) + "}";
    }
    Integer mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (body.empty())
      os << mag.get_str();
    else
      os << (mag != 1 ? mag.get_str() : "") << body;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

const std::vector<BiPoly>& known_factors() {
  static const std::vector<BiPoly> f = [] {
    auto one_minus = [](std::int64_t q, std::int64_t m, Var v) {
      return BiPoly::constant(1, v) - BiPoly::monomial(1, q, m, v);
    };
    return std::vector<BiPoly>{one_minus(0, 3, Var::X),    one_minus(3, 6, Var::X),
                               one_minus(285, 102, Var::t), one_minus(573, 204, Var::t),
                               one_minus(0, 1, Var::t),     one_minus(1, 1, Var::t)};
  }();
  return f;
}

RationalFn::RationalFn(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), Errc::input, "zero denominator");
  normalize();
}

RationalFn::RationalFn(BiPoly poly) : num_(std::move(poly)), den_(BiPoly::constant(1)) { normalize(); }

Var RationalFn::var() const {
  if (!num_.is_main_constant()) return num_.var();
  return den_.var();
}

void RationalFn::normalize() {
  // Agree on the main variable.
  if (num_.var() != den_.var()) {
    if (num_.is_main_constant())
      num_ = num_.with_var(den_.var());
    else if (den_.is_main_constant())
      den_ = den_.with_var(num_.var());
    else
      fail(Errc::input, "numerator and denominator use different variables");
  }
  if (num_.is_zero()) {
    den_ = BiPoly::constant(1, den_.var());
    return;
  }
  std::int64_t sq = std::min(num_.min_q(), den_.min_q());
  std::int64_t sm = std::min(num_.min_main(), den_.min_main());
  if (sq != 0 || sm != 0) {
    num_ = num_.shifted(-sq, -sm);
    den_ = den_.shifted(-sq, -sm);
  }
  for (const auto& f : known_factors()) {
    if (f.var() != den_.var()) continue;
    for (;;) {
      auto dq = den_.divide_exact(f);
      if (!dq) break;
      auto nq = num_.divide_exact(f);
      if (!nq) break;
      num_ = std::move(*nq);
      den_ = std::move(*dq);
    }
  }
  Integer g;
  Integer cn = num_.content(), cd = den_.content();
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading().second < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  require(!b.num_.is_zero(), Errc::input, "division by zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn RationalFn::pow(int n) const {
  if (n < 0) return RationalFn(BiPoly::constant(1, var())) / pow(-n);
  return RationalFn(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

bool RationalFn::operator==(const RationalFn& o) const {
  try {
    return (num_ * o.den_).terms() == (o.num_ * den_).terms();
  } catch (const Error&) {
    return false;  // different main variables
  }
}

BiPoly RationalFn::series(std::int64_t n) const {
  require(n >= 0, Errc::input, "series degree must be nonnegative");
  BiPoly d0 = den_.main_coefficient(0);
  bool unit = d0.size() == 1 && d0.terms().begin()->first.second == 0 &&
              (d0.terms().begin()->second == 1 || d0.terms().begin()->second == -1);
  require(unit, Errc::input, "series expansion needs a denominator with constant term +-1");
  Integer u = d0.terms().begin()->second;
  const Var v = var();
  std::vector<BiPoly> s;
  for (std::int64_t k = 0; k <= n; ++k) {
    BiPoly acc = num_.main_coefficient(k).with_var(v);
    for (const auto& [key, c] : den_.terms()) {
      std::int64_t j = key.first;
      if (j == 0 || j > k) continue;
      acc -= s[k - j].scaled(c).shifted(key.second, 0);
    }
    s.push_back(acc.scaled(u));  // u = +-1 is its own inverse
  }
  BiPoly out(v);
  for (std::int64_t k = 0; k <= n; ++k) out += s[k].shifted(0, k);
  return out;
}

std::vector<BiPoly> RationalFn::denominator_factors() const {
  std::vector<BiPoly> out;
  BiPoly rest = den_;
  for (const auto& f : known_factors()) {
    if (f.var() != rest.var()) continue;
    while (auto q = rest.divide_exact(f)) {
      out.push_back(f);
      rest = std::move(*q);
    }
  }
  if (!(rest.is_main_constant() && rest.terms().size() == 1 && rest.terms().begin()->second == 1 &&
        rest.terms().begin()->first.second == 0) ||
      out.empty())
    out.insert(out.begin(), rest);
  return out;
}

std::string RationalFn::to_string() const {
  auto factors = denominator_factors();
  std::string n = num_.to_string();
  if (factors.size() == 1 && factors[0].terms().size() == 1 && factors[0].to_string() == "1") return n;
  std::string d;
  for (const auto& f : factors) d += (d.empty() ? "" : "*") + ("(" + f.to_string() + ")");
  if (factors.size() > 1) d = "(" + d + ")";
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/" + d;
}

std::string RationalFn::to_latex() const {
  auto factors = denominator_factors();
  std::string d;
  for (const auto& f : factors) d += "(" + f.to_latex() + ")";
  return "\\frac{" + num_.to_latex() + "}{" + d + "}";
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip();
    require(pos_ == s_.size(), Errc::input, "unexpected '" + s_.substr(pos_) + "' in rational function");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFn term() {
    RationalFn acc = unary();
    for (;;) {
      if (eat('*'))
        acc = acc * unary();
      else if (eat('/'))
        acc = acc / unary();
      else {
        // Implicit multiplication: "2q", "q t", "(..)(..)".
        skip();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
          acc = acc * unary();
        else
          return acc;
      }
    }
  }

  RationalFn unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    RationalFn base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      require(pos_ > start, Errc::input, "expected an exponent after '^'");
      long e = std::stol(s_.substr(start, pos_ - start));
      require(e <= 100000, Errc::input, "exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  RationalFn primary() {
    skip();
    require(pos_ < s_.size(), Errc::input, "unexpected end of rational function");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      require(eat(')'), Errc::input, "missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFn(BiPoly::constant(Integer(s_.substr(start, pos_ - start))));
    }
    ++pos_;
    switch (c) {
      case 'q':
      case 'p':
        return RationalFn(BiPoly::monomial(1, 1, 0));
      case 't':
        return RationalFn(BiPoly::monomial(1, 0, 1, Var::t));
      case 'X':
        return RationalFn(BiPoly::monomial(1, 0, 1, Var::X));
      default:
        fail(Errc::input, std::string("unknown symbol '") + c + "' in rational function");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational_function(const std::string& text) { return Parser(text).parse(); }

}  // namespace nilzeta::zeta
