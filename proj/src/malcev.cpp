#include "nilzeta/malcev.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "nilzeta/error.hpp"
#include "nilzeta/linalg.hpp"
#include "nilzeta/sampling.hpp"

namespace nilzeta::malcev {

namespace {

// Truncated free associative algebra: words are strings of letter indices.
using Word = std::string;
using Assoc = std::map<Word, Rational>;

void add_to(Assoc& acc, const Assoc& a, const Rational& s) {
  for (const auto& [w, c] : a) {
    Rational& slot = acc[w];
    slot += c * s;
    if (slot == 0) acc.erase(w);
  }
}

Assoc mul(const Assoc& a, const Assoc& b, int c) {
  Assoc out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > c) continue;
      Rational& slot = out[wa + wb];
      slot += ca * cb;
      if (slot == 0) out.erase(wa + wb);
    }
  return out;
}

Assoc letter(int i) { return Assoc{{Word(1, static_cast<char>(i)), Rational(1)}}; }

Assoc one() { return Assoc{{Word(), Rational(1)}}; }

Assoc exp_series(const Assoc& u, int c) {
  Assoc out = one(), power = one();
  Integer fact = 1;
  for (int n = 1; n <= c; ++n) {
    power = mul(power, u, c);
    fact *= n;
    add_to(out, power, Rational(1) / Rational(fact));
  }
  return out;
}

// log(w) for w with constant term 1.
Assoc log_series(const Assoc& w, int c) {
  Assoc x = w;
  add_to(x, one(), Rational(-1));
  Assoc out, power = one();
  for (int n = 1; n <= c; ++n) {
    power = mul(power, x, c);
    add_to(out, power, Rational(n % 2 == 1 ? 1 : -1, n));
  }
  return out;
}

Assoc hall_to_assoc(const std::vector<free_lie::BasicCommutator>& hall, std::size_t k, int c,
                    std::map<std::size_t, Assoc>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  const auto& b = hall[k];
  Assoc out;
  if (b.is_leaf()) {
    out = letter(b.generator);
  } else {
    Assoc l = hall_to_assoc(hall, b.left, c, memo);
    Assoc r = hall_to_assoc(hall, b.right, c, memo);
    out = mul(l, r, c);
    add_to(out, mul(r, l, c), Rational(-1));
  }
  memo.emplace(k, out);
  return out;
}

std::string display_word(const std::string& hall_name, Rational& coef) {
  if (hall_name.size() < 2 || hall_name.find('(') != std::string::npos) return hall_name;
  std::string s = hall_name;
  std::swap(s[0], s[1]);
  coef = -coef;
  return s;
}

void require_p(unsigned long p) {
  require(is_prime(p), Errc::input, "p must be prime");
  require(p > 3, Errc::unsupported, "p <= 3 collides with the series denominators");
}

}  // namespace

TruncatedBCH bch_truncated(int c) {
  require(c >= 1, Errc::input, "bch_truncated: class must be positive");
  TruncatedBCH out;
  out.c = c;
  out.free = std::make_shared<const free_lie::FreeNilpotentAlgebra>(2, c);
  const auto& hall = out.free->hall();

  Assoc series = log_series(mul(exp_series(letter(0), c), exp_series(letter(1), c), c), c);

  std::map<std::size_t, Assoc> memo;
  std::vector<Assoc> lie_rows;
  std::map<Word, std::size_t> columns;
  for (std::size_t k = 0; k < hall.size(); ++k) {
    lie_rows.push_back(hall_to_assoc(hall, k, c, memo));
    for (const auto& [w, _] : lie_rows.back()) columns.emplace(w, 0);
  }
  for (const auto& [w, _] : series) columns.emplace(w, 0);
  std::size_t idx = 0;
  for (auto& [w, i] : columns) i = idx++;

  RatMatrix a(hall.size(), std::vector<Rational>(columns.size()));
  for (std::size_t k = 0; k < hall.size(); ++k)
    for (const auto& [w, coef] : lie_rows[k]) a[k][columns.at(w)] = coef;
  std::vector<Rational> b(columns.size());
  for (const auto& [w, coef] : series) b[columns.at(w)] = coef;
  auto x = solve_left(a, b);
  require(x.has_value(), Errc::invariant, "log(exp X exp Y) is not a Lie element");

  out.series = LieElement::from_dense(out.free->algebra(), *x);
  out.m = 1;
  for (const auto& [k, coef] : out.series.coeffs()) {
    BchTerm t;
    t.hall_ordinal = k;
    t.hall_name = out.free->algebra()->basis(k).name;
    t.hall_coefficient = coef;
    t.display_coefficient = coef;
    t.display_name = display_word(t.hall_name, t.display_coefficient);
    t.degree = out.free->algebra()->basis(k).weight;
    out.terms.push_back(std::move(t));
    mpz_lcm(out.m.get_mpz_t(), out.m.get_mpz_t(), coef.get_den().get_mpz_t());
  }
  return out;
}

std::string TruncatedBCH::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const Rational& c = t.display_coefficient;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << to_text(mag) << "*";
    os << t.display_name;
    first = false;
  }
  return first ? "0" : os.str();
}

LieElement phi(const TruncatedBCH& bch, const LieElement& u, const LieElement& v) {
  require(u.algebra() && u.algebra() == v.algebra(), Errc::input, "phi: arguments from different algebras");
  require(u.algebra()->nilpotency_class() <= bch.c, Errc::input,
          "phi: algebra class exceeds the truncation degree");
  const auto& hall = bch.free->hall();
  std::vector<std::optional<LieElement>> val(hall.size());
  // Hall factors precede their products, so one forward pass suffices.
  for (std::size_t k = 0; k < hall.size(); ++k) {
    if (hall[k].is_leaf())
      val[k] = hall[k].generator == 0 ? u : v;
    else
      val[k] = bracket(*val[hall[k].left], *val[hall[k].right]);
  }
  LieElement out(u.algebra());
  for (const auto& [k, coef] : bch.series.coeffs()) out += coef * *val[k];
  return out;
}

MalcevGroup::MalcevGroup(AlgebraPtr algebra, int c) : alg_(std::move(algebra)), bch_(bch_truncated(c)) {
  require(alg_->nilpotency_class() <= c, Errc::input, "group law truncated below the algebra's class");
}

bool MalcevGroup::contains(const LieElement& v) const {
  if (v.algebra() != alg_) return false;
  for (const auto& [k, coef] : v.coeffs()) {
    Rational q = coef / Rational(bch_.m);
    if (!is_integer(q)) return false;
  }
  return true;
}

GroupElement MalcevGroup::element(const LieElement& v) const {
  require(contains(v), Errc::input, "element is not in m*L (m = " + bch_.m.get_str() + ")");
  return GroupElement(v);
}

GroupElement MalcevGroup::identity() const { return GroupElement(LieElement(alg_)); }

GroupElement MalcevGroup::checked(LieElement v) const {
  require(contains(v), Errc::invariant, "group operation left m*L: " + v.to_string());
  return GroupElement(std::move(v));
}

GroupElement MalcevGroup::mul(const GroupElement& a, const GroupElement& b) const {
  return checked(phi(bch_, a.coords(), b.coords()));
}

GroupElement MalcevGroup::inverse(const GroupElement& a) const { return GroupElement(-a.coords()); }

GroupElement MalcevGroup::commutator(const GroupElement& a, const GroupElement& b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

GroupElement MalcevGroup::iterated_commutator(const std::vector<GroupElement>& xs) const {
  require(!xs.empty(), Errc::input, "empty commutator");
  GroupElement acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(acc, xs[i]);
  return acc;
}

CommutatorComparison group_commutator_vs_lie(const MalcevGroup& g, const std::vector<GroupElement>& xs) {
  CommutatorComparison out;
  out.group_value = g.iterated_commutator(xs).coords();
  std::vector<LieElement> ls;
  for (const auto& x : xs) ls.push_back(x.coords());
  out.lie_value = left_normed(ls);
  out.equal = out.group_value == out.lie_value;
  return out;
}

CongruenceReport limit_congruence(const TruncatedBCH& bch, const LieElement& u, const LieElement& v, int k,
                                  unsigned long p) {
  require_p(p);
  require(k >= 1, Errc::input, "k must be at least 1");
  CongruenceReport rep;
  rep.p = p;
  rep.k = k;
  Rational pk(ipow(Integer(p), k));
  LieElement a = pk * u, b = pk * v;
  LieElement sum = phi(bch, a, b) - pk * (u + v);
  LieElement comm = phi(bch, phi(bch, -a, -b), phi(bch, a, b)) - (pk * pk) * bracket(u, v);
  std::size_t d = u.algebra()->dimension();
  for (std::size_t i = 0; i < d; ++i) {
    rep.sum_valuations.push_back(valuation(sum.coefficient(i), p));
    rep.commutator_valuations.push_back(valuation(comm.coefficient(i), p));
  }
  rep.min_sum = sum.min_valuation(p);
  rep.min_commutator = comm.min_valuation(p);
  rep.ok = rep.min_sum >= 2 * k && rep.min_commutator >= 3 * k;
  return rep;
}

CosetReport coset_check(const TruncatedBCH& bch, const LieElement& x, int k, int K, unsigned long p,
                        std::size_t samples, std::uint64_t seed) {
  require_p(p);
  require(k >= 1 && K >= k, Errc::input, "coset_check needs 1 <= k <= K");
  Sampler s(seed);
  Rational pk(ipow(Integer(p), k));
  long top = ipow(Integer(p), K).get_si() - 1;
  CosetReport rep;
  for (std::size_t n = 0; n < samples; ++n) {
    LieElement w = s.element(x.algebra(), 0, top);
    LieElement fwd = phi(bch, x, pk * w) - x;
    if (fwd.min_valuation(p) < k) ++rep.forward_failures;
    LieElement back = phi(bch, -x, x + pk * w);
    if (back.min_valuation(p) < k) ++rep.backward_failures;
    ++rep.samples;
  }
  return rep;
}

}  // namespace nilzeta::malcev
