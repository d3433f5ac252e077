#include "nilzeta/expression.hpp"

#include <cctype>
#include <string>

#include "nilzeta/error.hpp"

namespace nilzeta {
namespace {

class Parser {
 public:
  Parser(const AlgebraPtr& algebra, std::string_view text) : alg_(algebra), s_(text) {}

  LieElement parse() {
    LieElement e = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::input, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  LieElement expr() {
    LieElement acc(alg_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      LieElement t = term();
      if (negate)
        acc -= t;
      else
        acc += t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    return acc;
  }

  Integer number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  LieElement term() {
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coef = Rational(number());
      if (accept('/')) {
        Integer den = number();
        if (den == 0) error("zero denominator");
        coef /= Rational(den);
        coef.canonicalize();
      }
      have_coef = true;
      accept('*');
    }
    if (have_coef && !starts_atom()) {
      if (coef == 0) return LieElement(alg_);
      error("scalar without a Lie monomial");
    }
    LieElement p = product();
    p *= coef;
    return p;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '[' || generator_index(c) >= 0;
  }

  int generator_index(char c) const {
    const auto& names = alg_->generator_names();
    for (std::size_t g = 0; g < names.size(); ++g)
      if (names[g].size() == 1 && names[g][0] == c) return static_cast<int>(g);
    return -1;
  }

  LieElement product() {
    LieElement acc = atom();
    while (starts_atom()) acc = bracket(acc, atom());
    return acc;
  }

  LieElement atom() {
    skip_ws();
    if (accept('(')) {
      LieElement e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      LieElement a = expr();
      expect(',');
      LieElement b = expr();
      expect(']');
      return bracket(a, b);
    }
    if (pos_ >= s_.size()) error("unexpected end of expression");
    int g = generator_index(s_[pos_]);
    if (g < 0) error(std::string("unknown generator '") + s_[pos_] + "'");
    ++pos_;
    return LieElement::generator(alg_, static_cast<std::size_t>(g));
  }

  const AlgebraPtr& alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_lie_expression(const AlgebraPtr& algebra, std::string_view text) {
  require(algebra != nullptr, Errc::input, "null algebra");
  return Parser(algebra, text).parse();
}

}  // namespace nilzeta
