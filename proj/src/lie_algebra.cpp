#include "nilzeta/lie_algebra.hpp"

#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta {

void add_scaled(Coeffs& acc, const Coeffs& v, const Rational& s) {
  if (s == 0) return;
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.try_emplace(k, c * s);
    if (!inserted) {
      it->second += c * s;
      if (it->second == 0) acc.erase(it);
    }
  }
}

LieAlgebra::LieAlgebra(std::string kind, std::vector<std::string> generator_names,
                       std::vector<BasisEntry> basis, std::vector<Coeffs> tensor,
                       int nilpotency_class)
    : kind_(std::move(kind)),
      generator_names_(std::move(generator_names)),
      basis_(std::move(basis)),
      tensor_(std::move(tensor)),
      class_(nilpotency_class) {
  require(tensor_.size() == basis_.size() * basis_.size(), Errc::invariant,
          "structure tensor has wrong size");
  generator_ordinals_.assign(generator_names_.size(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    by_name_.emplace(basis_[i].name, i);
    if (basis_[i].generator) generator_ordinals_.at(*basis_[i].generator) = i;
  }
  for (std::size_t g : generator_ordinals_)
    require(g < basis_.size(), Errc::invariant, "generator missing from basis");
}

std::optional<std::size_t> LieAlgebra::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Coeffs LieAlgebra::bracket(const Coeffs& a, const Coeffs& b) const {
  Coeffs out;
  for (const auto& [i, ai] : a)
    for (const auto& [j, bj] : b) {
      const Coeffs& s = structure(i, j);
      if (!s.empty()) add_scaled(out, s, ai * bj);
    }
  return out;
}

LieElement::LieElement(AlgebraPtr algebra, Coeffs coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    require(it->first < algebra_->dimension(), Errc::input, "basis ordinal out of range");
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LieElement LieElement::basis(AlgebraPtr algebra, std::size_t ordinal) {
  require(ordinal < algebra->dimension(), Errc::input, "basis ordinal out of range");
  Coeffs c;
  c.emplace(ordinal, Rational(1));
  return LieElement(std::move(algebra), std::move(c));
}

LieElement LieElement::generator(AlgebraPtr algebra, std::size_t g) {
  std::size_t ord = algebra->generator_ordinal(g);
  return basis(std::move(algebra), ord);
}

LieElement LieElement::from_dense(AlgebraPtr algebra, const std::vector<Rational>& coords) {
  require(coords.size() == algebra->dimension(), Errc::input, "coordinate vector has wrong length");
  Coeffs c;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) c.emplace(i, coords[i]);
  return LieElement(std::move(algebra), std::move(c));
}

Rational LieElement::coefficient(std::size_t ordinal) const {
  auto it = coeffs_.find(ordinal);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> LieElement::dense() const {
  std::vector<Rational> out(algebra_->dimension());
  for (const auto& [k, c] : coeffs_) out[k] = c;
  return out;
}

bool LieElement::is_integral() const {
  for (const auto& [k, c] : coeffs_)
    if (!nilzeta::is_integer(c)) return false;
  return true;
}

bool LieElement::is_p_integral(unsigned long p) const {
  for (const auto& [k, c] : coeffs_)
    if (!nilzeta::is_p_integral(c, p)) return false;
  return true;
}

int LieElement::min_valuation(unsigned long p) const {
  int v = kInfiniteValuation;
  for (const auto& [k, c] : coeffs_) v = std::min(v, valuation(c, p));
  return v;
}

bool LieElement::in_weight_at_least(int w) const {
  for (const auto& [k, c] : coeffs_)
    if (algebra_->basis(k).weight < w) return false;
  return true;
}

void LieElement::check_same(const LieElement& o) const {
  require(algebra_ && algebra_ == o.algebra_, Errc::input, "elements belong to different algebras");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  add_scaled(coeffs_, o.coeffs_, Rational(1));
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  add_scaled(coeffs_, o.coeffs_, Rational(-1));
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
  } else {
    for (auto& [k, c] : coeffs_) c *= s;
  }
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  r *= Rational(-1);
  return r;
}

bool LieElement::operator==(const LieElement& o) const {
  return algebra_ == o.algebra_ && coeffs_ == o.coeffs_;
}

std::string LieElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << to_text(mag) << "*";
    os << algebra_->basis(k).name;
    first = false;
  }
  return os.str();
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  require(a.algebra() && a.algebra() == b.algebra(), Errc::input,
          "bracket of elements from different algebras");
  return LieElement(a.algebra(), a.algebra()->bracket(a.coeffs(), b.coeffs()));
}

LieElement left_normed(const std::vector<LieElement>& factors) {
  require(!factors.empty(), Errc::input, "empty commutator");
  LieElement acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = bracket(acc, factors[i]);
  return acc;
}

}  // namespace nilzeta
