#include "nilzeta/zeta.hpp"

#include <algorithm>

#include "nilzeta/error.hpp"
#include "nilzeta/padic_measure.hpp"

namespace nilzeta::zeta {

namespace {

constexpr std::int64_t kQShift = 95;  // X = p^(95 - 34 s)
constexpr std::int64_t kTShift = 34;

BiPoly x_poly(std::initializer_list<std::tuple<long, std::int64_t, std::int64_t>> terms) {
  BiPoly p(Var::X);
  for (auto [c, qe, xe] : terms) p.add_term(Integer(c), qe, xe);
  return p;
}

BiPoly common_denominator() { return x_poly({{1, 0, 0}, {-1, 0, 3}}) * x_poly({{1, 0, 0}, {-1, 3, 6}}); }

}  // namespace

BiPoly lattice_sum_truncated(int D, Residues which) {
  require(D >= 0, Errc::input, "degree must be nonnegative");
  BiPoly out(Var::X);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) {
      if ((i + j) % 3 != 0) continue;
      bool equal = i % 3 == 0;
      if (which == Residues::equal && !equal) continue;
      if (which == Residues::mixed && equal) continue;
      out.add_term(1, std::min(i, j), i + j);
    }
  return out;
}

RationalFn closed_form() {
  return RationalFn(x_poly({{1, 0, 0}, {1, 0, 3}, {2, 1, 3}, {2, 2, 6}}), common_denominator());
}

RationalFn piece_equal() { return RationalFn(x_poly({{1, 0, 0}, {1, 0, 3}}), common_denominator()); }

RationalFn piece_mixed() { return RationalFn(x_poly({{2, 1, 3}, {2, 2, 6}}), common_denominator()); }

BiPoly integral_series_from_theta(int D) {
  require(D >= 0, Errc::input, "degree must be nonnegative");
  BiPoly out(Var::t);
  for (int vb = 0; vb <= D; ++vb)
    for (int vc = 0; vb + vc <= D; ++vc) {
      if ((vb + vc) % 3 != 0) continue;
      padic::ValuationTriple v((vb + vc) / 3, vb, vc);
      std::int64_t qe = padic::theta(1, v) + padic::theta(2, v) + padic::theta(3, v);
      out.add_term(1, qe, padic::det_valuation(v));
    }
  return out;
}

BiPoly substitute_to_zeta(const BiPoly& poly) {
  require(poly.var() == Var::X || poly.is_main_constant(), Errc::input, "substitution expects a function of X");
  return poly.substitute_main(kQShift, kTShift);
}

RationalFn substitute_to_zeta(const RationalFn& rf) {
  return RationalFn(substitute_to_zeta(rf.num()), substitute_to_zeta(rf.den()));
}

RationalFn stated_zeta() {
  BiPoly num(Var::t);
  num.add_term(1, 0, 0);
  num.add_term(1, 285, 102);
  num.add_term(2, 286, 102);
  num.add_term(2, 572, 204);
  BiPoly d1 = BiPoly::constant(1, Var::t) - BiPoly::monomial(1, 285, 102, Var::t);
  BiPoly d2 = BiPoly::constant(1, Var::t) - BiPoly::monomial(1, 573, 204, Var::t);
  return RationalFn(num, d1 * d2);
}

std::optional<FunctionalEquation> functional_equation_test(const RationalFn& z) {
  const BiPoly& n = z.num();
  const BiPoly& d = z.den();
  require(!n.is_zero(), Errc::input, "functional equation of the zero function");
  // Z(1/q, 1/t) = (n_rev / d_rev) q^(dq - nq) t^(dm - nm).
  std::int64_t base_q = d.max_q() - n.max_q();
  std::int64_t base_m = d.max_main() - n.max_main();
  BiPoly p1 = n.reversed() * d;  // ratio = p1 / p2 * q^base_q t^base_m
  BiPoly p2 = d.reversed() * n;
  auto [k1, c1] = p1.leading();
  auto [k2, c2] = p2.leading();
  if (c1 != c2 && c1 != -c2) return std::nullopt;
  int sign = c1 == c2 ? 0 : 1;
  std::int64_t sm = k1.first - k2.first, sq = k1.second - k2.second;
  // p1 == +-q^sq t^sm p2; shift whichever side keeps exponents nonnegative.
  BiPoly lhs = p1.shifted(std::max<std::int64_t>(0, -sq), std::max<std::int64_t>(0, -sm));
  BiPoly rhs = p2.shifted(std::max<std::int64_t>(0, sq), std::max<std::int64_t>(0, sm));
  if (sign) rhs = -rhs;
  if (lhs.terms() != rhs.terms()) return std::nullopt;
  return FunctionalEquation{sign, sq + base_q, sm + base_m};
}

RationalFn times_monomial(const RationalFn& z, const Integer& s, std::int64_t alpha, std::int64_t beta) {
  require(alpha >= 0 && beta >= 0, Errc::input, "monomial exponents must be nonnegative");
  return RationalFn(z.num().shifted(alpha, beta).scaled(s), z.den());
}

}  // namespace nilzeta::zeta
