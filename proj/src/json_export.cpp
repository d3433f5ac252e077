#include "nilzeta/json_export.hpp"

namespace nilzeta::json {

Json basis(const LieAlgebra& alg) {
  Json out = Json::array();
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    const auto& b = alg.basis(k);
    out.push_back({{"name", b.name}, {"weight", b.weight}, {"multidegree", b.multidegree}, {"ordinal", k + 1}});
  }
  return out;
}

namespace {

Json coeff_list(const Coeffs& c) {
  Json out = Json::array();
  for (const auto& [k, x] : c) out.push_back(Json::array({k + 1, to_json_string(x)}));
  return out;
}

}  // namespace

Json tensor(const LieAlgebra& alg) {
  Json out = Json::array();
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    for (std::size_t j = i + 1; j < alg.dimension(); ++j) {
      const Coeffs& c = alg.structure(i, j);
      if (c.empty()) continue;
      out.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeff_list(c)}});
    }
  return out;
}

Json algebra(const LieAlgebra& alg) {
  return {{"kind", alg.kind()},
          {"generators", alg.generator_names()},
          {"class", alg.nilpotency_class()},
          {"dimension", alg.dimension()},
          {"basis", basis(alg)},
          {"tensor", tensor(alg)}};
}

Json quotient(const lattice::QuotientLattice& q) {
  Json out = algebra(*q.algebra());
  out["complement_words"] = q.complement_words();
  out["complement_determinant"] = q.complement_determinant().get_str();
  out["ideal_rank"] = q.ideal().rank();
  out["ideal_basis"] = matrix(q.ideal().basis());
  out["projection"] = matrix(q.projection());
  return out;
}

Json element(const LieElement& v) { return coeff_list(v.coeffs()); }

Json matrix(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json_string(Rational(x)));
    out.push_back(std::move(r));
  }
  return out;
}

Json bch(const malcev::TruncatedBCH& b) {
  Json terms = Json::array();
  for (const auto& t : b.terms)
    terms.push_back({{"hall", t.hall_name},
                     {"hall_coefficient", to_json_string(t.hall_coefficient)},
                     {"word", t.display_name},
                     {"coefficient", to_json_string(t.display_coefficient)},
                     {"degree", t.degree}});
  return {{"class", b.c}, {"m", b.m.get_str()}, {"terms", terms}, {"text", b.to_string()}};
}

Json poly(const zeta::BiPoly& p) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms()) out.push_back(Json::array({key.second, key.first, c.get_str()}));
  return out;
}

Json rational_function(const zeta::RationalFn& f) {
  return {{"variable", zeta::var_name(f.var())},
          {"numerator", poly(f.num())},
          {"denominator", poly(f.den())},
          {"text", f.to_string()},
          {"latex", f.to_latex()}};
}

}  // namespace nilzeta::json
