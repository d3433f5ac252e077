#include "nilzeta/lattice.hpp"

#include <cctype>

#include "nilzeta/error.hpp"
#include "nilzeta/expression.hpp"

namespace nilzeta::lattice {

namespace {

std::vector<Integer> integer_row(const LieElement& v) {
  require(v.is_integral(), Errc::input, "element is not integral: " + v.to_string());
  std::vector<Integer> row(v.algebra()->dimension());
  for (const auto& [k, c] : v.coeffs()) row[k] = c.get_num();
  return row;
}

LieElement from_row(const AlgebraPtr& alg, const std::vector<Integer>& row) {
  Coeffs c;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) c.emplace(k, Rational(row[k]));
  return LieElement(alg, std::move(c));
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

LieIdeal::LieIdeal(AlgebraPtr ambient, std::vector<LieElement> generators, IntMatrix hnf)
    : ambient_(std::move(ambient)), generators_(std::move(generators)), hnf_(std::move(hnf)) {}

std::vector<LieElement> LieIdeal::basis_elements() const {
  std::vector<LieElement> out;
  for (const auto& row : hnf_) out.push_back(from_row(ambient_, row));
  return out;
}

bool LieIdeal::contains(const LieElement& v) const {
  require(v.algebra() == ambient_, Errc::input, "element from a different algebra");
  if (!v.is_integral()) return false;
  auto rem = hnf_reduce(hnf_, integer_row(v));
  for (const auto& x : rem)
    if (x != 0) return false;
  return true;
}

IntMatrix integer_span(const AlgebraPtr& ambient, const std::vector<LieElement>& elements) {
  IntMatrix rows;
  for (const auto& e : elements) {
    require(e.algebra() == ambient, Errc::input, "element from a different algebra");
    rows.push_back(integer_row(e));
  }
  return hermite_normal_form(std::move(rows), ambient->dimension());
}

LieIdeal ideal_closure(const AlgebraPtr& ambient, const std::vector<LieElement>& generators) {
  for (const auto& g : generators)
    require(g.is_integral(), Errc::input, "ideal generator is not integral: " + g.to_string());
  const std::size_t d = ambient->dimension();
  IntMatrix hnf = integer_span(ambient, generators);
  for (;;) {
    IntMatrix rows = hnf;
    for (const auto& row : hnf) {
      LieElement v = from_row(ambient, row);
      for (std::size_t k = 0; k < d; ++k) {
        LieElement w = bracket(v, LieElement::basis(ambient, k));
        if (!w.is_zero()) rows.push_back(integer_row(w));
      }
    }
    IntMatrix next = hermite_normal_form(std::move(rows), d);
    if (next == hnf) break;
    hnf = std::move(next);
  }
  return LieIdeal(ambient, generators, std::move(hnf));
}

bool membership(const LieIdeal& ideal, const LieElement& v) { return ideal.contains(v); }

std::vector<int> word_multidegree(const std::string& word, const std::vector<std::string>& generator_names) {
  std::vector<int> md(generator_names.size(), 0);
  for (char ch : word) {
    bool found = false;
    for (std::size_t g = 0; g < generator_names.size(); ++g)
      if (generator_names[g].size() == 1 &&
          std::tolower(static_cast<unsigned char>(generator_names[g][0])) ==
              std::tolower(static_cast<unsigned char>(ch))) {
        ++md[g];
        found = true;
      }
    require(found, Errc::input, std::string("unknown generator letter '") + ch + "'");
  }
  return md;
}

QuotientLattice::QuotientLattice(std::shared_ptr<const free_lie::FreeNilpotentAlgebra> free, LieIdeal ideal,
                                 std::vector<std::string> complement_words)
    : free_(std::move(free)), ideal_(std::move(ideal)), words_(std::move(complement_words)) {
  const AlgebraPtr& amb = free_->algebra();
  const std::size_t d = amb->dimension();
  const std::size_t r = words_.size();
  require(r + ideal_.rank() == d, Errc::invariant, "complement size does not match the ideal corank");

  RatMatrix square;
  for (const auto& w : words_) {
    LieElement rep = free_->normal_form(w);
    complement_.push_back(integer_row(rep));
    square.push_back(rep.dense());
  }
  for (const auto& row : ideal_.basis()) {
    std::vector<Rational> rr;
    for (const auto& x : row) rr.emplace_back(x);
    square.push_back(rr);
  }
  Rational det = determinant(square);
  require(det == 1 || det == -1, Errc::invariant,
          "complement together with the ideal basis is not unimodular (det " + to_text(det) + ")");
  det_ = det.get_num();
  RatMatrix inv = *inverse(square);
  RatMatrix proj(d, std::vector<Rational>(r));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < r; ++k) proj[i][k] = inv[i][k];
  projection_ = to_integer(proj);

  std::vector<std::string> gen_names;
  for (const auto& g : free_->generators()) gen_names.push_back(lower(g.name));
  std::vector<BasisEntry> entries;
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < r; ++k) {
    BasisEntry e;
    e.name = lower(words_[k]);
    e.weight = static_cast<int>(words_[k].size());
    e.multidegree = word_multidegree(words_[k], gen_names);
    if (e.weight == 1) {
      for (std::size_t g = 0; g < gen_names.size(); ++g)
        if (gen_names[g] == e.name) e.generator = static_cast<int>(g);
      require(e.generator.has_value(), Errc::invariant, "weight-1 complement word is not a generator");
    } else {
      auto prefix = index.find(e.name.substr(0, e.name.size() - 1));
      auto last = index.find(e.name.substr(e.name.size() - 1));
      require(prefix != index.end() && last != index.end(), Errc::invariant,
              "complement words must be prefix-closed: " + e.name);
      e.factors = std::make_pair(prefix->second, last->second);
    }
    index.emplace(e.name, k);
    entries.push_back(std::move(e));
  }

  std::vector<Coeffs> tensor(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Coeffs br = amb->bracket(LieElement::from_dense(amb, square[i]).coeffs(),
                               LieElement::from_dense(amb, square[j]).coeffs());
      std::vector<Rational> v(d);
      for (const auto& [k, c] : br) v[k] = c;
      auto q = row_times(v, proj);
      Coeffs out;
      for (std::size_t k = 0; k < r; ++k)
        if (q[k] != 0) out.emplace(k, q[k]);
      tensor[i * r + j] = std::move(out);
    }
  quotient_ = std::make_shared<const LieAlgebra>("quotient", gen_names, std::move(entries), std::move(tensor),
                                                 free_->nilpotency_class());
  for (std::size_t k = 0; k < r; ++k) {
    const auto& e = quotient_->basis(k);
    if (!e.factors) continue;
    const Coeffs& s = quotient_->structure(e.factors->first, e.factors->second);
    require(s.size() == 1 && s.begin()->first == k && s.begin()->second == 1, Errc::invariant,
            "quotient basis word is not the bracket of its prefix and last letter: " + e.name);
  }
}

LieElement QuotientLattice::project(const LieElement& v) const {
  require(v.algebra() == ambient(), Errc::input, "project: element is not in the ambient algebra");
  std::vector<Rational> out(rank());
  for (const auto& [i, c] : v.coeffs())
    for (std::size_t k = 0; k < rank(); ++k)
      if (projection_[i][k] != 0) out[k] += c * Rational(projection_[i][k]);
  return LieElement::from_dense(quotient_, out);
}

LieElement QuotientLattice::lift(const LieElement& q) const {
  require(q.algebra() == quotient_, Errc::input, "lift: element is not in the quotient");
  std::vector<Rational> out(ambient()->dimension());
  for (const auto& [k, c] : q.coeffs())
    for (std::size_t i = 0; i < out.size(); ++i)
      if (complement_[k][i] != 0) out[i] += c * Rational(complement_[k][i]);
  return LieElement::from_dense(ambient(), out);
}

LieElement QuotientLattice::element(const std::string& expr) const { return parse_lie_expression(quotient_, expr); }

LieElement QuotientLattice::basis_element(const std::string& name) const {
  auto k = quotient_->find(name);
  require(k.has_value(), Errc::input, "no quotient basis element named '" + name + "'");
  return LieElement::basis(quotient_, *k);
}

const std::vector<std::string>& lambda_basis_words() {
  static const std::vector<std::string> words = {
      "x",    "y",    "z",    "xy",   "xz",   "yz",   "xyy",  "xzz",  "xyz",  "xzy",  "xyx",  "xzx",  "xyyy",
      "xzzz", "xyxx", "xzxx", "xyxy", "xzxz", "xyxz", "xzxy", "xyzx", "xyzz", "xzyy", "xyzy", "xzyz"};
  return words;
}

std::vector<LieElement> lambda_relations(const free_lie::FreeNilpotentAlgebra& f) {
  return {f.normal_form("YXXX - YZY"), f.normal_form("ZXXX - ZYZ")};
}

std::vector<LieElement> listed_ideal_basis(const free_lie::FreeNilpotentAlgebra& f) {
  auto rel = lambda_relations(f);
  for (const char* w : {"YZYX", "ZYZX", "YZYY", "YZYZ", "ZYZZ"}) rel.push_back(f.normal_form(w));
  return rel;
}

QuotientLattice build_lambda() {
  auto f = std::make_shared<const free_lie::FreeNilpotentAlgebra>(3, 4);
  LieIdeal ideal = ideal_closure(f->algebra(), lambda_relations(*f));
  std::vector<std::string> upper;
  for (const auto& w : lambda_basis_words()) {
    std::string u = w;
    for (auto& ch : u) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    upper.push_back(u);
  }
  return QuotientLattice(std::move(f), std::move(ideal), std::move(upper));
}

std::vector<std::size_t> lower_central_ranks(const AlgebraPtr& alg) {
  const std::size_t d = alg->dimension();
  std::vector<std::size_t> ranks;
  RatMatrix current = identity_matrix(d);
  for (int step = 0; step <= alg->nilpotency_class(); ++step) {
    // Reduce to a row basis so the next bracketing pass stays small.
    RatMatrix basis;
    for (const auto& row : current) {
      RatMatrix trial = basis;
      trial.push_back(row);
      if (rank(trial) > basis.size()) basis.push_back(row);
    }
    ranks.push_back(basis.size());
    RatMatrix next;
    for (const auto& row : basis) {
      LieElement v = LieElement::from_dense(alg, row);
      for (std::size_t k = 0; k < d; ++k) {
        LieElement w = bracket(v, LieElement::basis(alg, k));
        if (!w.is_zero()) next.push_back(w.dense());
      }
    }
    current = std::move(next);
    if (basis.empty()) break;
  }
  while (ranks.size() < static_cast<std::size_t>(alg->nilpotency_class()) + 1) ranks.push_back(0);
  return ranks;
}

std::vector<std::size_t> graded_ranks(const AlgebraPtr& alg) {
  auto r = lower_central_ranks(alg);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) out.push_back(r[i] - r[i + 1]);
  return out;
}

std::size_t SameWeightReport::violations() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.integral || !r.same_multidegree) ++n;
  return n;
}

SameWeightReport same_weight_check(const QuotientLattice& q) {
  SameWeightReport rep;
  const auto& alg = q.algebra();
  const auto& names = alg->generator_names();
  const std::size_t n = names.size();
  std::size_t total = n * n * n * n;
  for (std::size_t code = 0; code < total; ++code) {
    std::string word;
    std::size_t c = code;
    std::vector<std::size_t> digits(4);
    for (int pos = 3; pos >= 0; --pos) {
      digits[pos] = c % n;
      c /= n;
    }
    std::vector<LieElement> factors;
    for (auto g : digits) {
      word += names[g];
      factors.push_back(LieElement::generator(alg, g));
    }
    SameWeightRow row;
    row.word = word;
    row.value = left_normed(factors);
    auto md = word_multidegree(word, names);
    for (const auto& [k, coef] : row.value.coeffs()) {
      if (!is_integer(coef)) row.integral = false;
      if (alg->basis(k).multidegree != md) row.same_multidegree = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace nilzeta::lattice
