#include <gtest/gtest.h>

#include "frozen.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/malcev.hpp"
#include "nilzeta/sampling.hpp"

using namespace nilzeta;
using malcev::MalcevGroup;

namespace {

const lattice::QuotientLattice& lambda() {
  static const lattice::QuotientLattice q = lattice::build_lambda();
  return q;
}

const MalcevGroup& group() {
  static const MalcevGroup g(lambda().algebra(), 4);
  return g;
}

}  // namespace

TEST(Bch, QuarticPolynomial) {
  auto b = malcev::bch_truncated(4);
  EXPECT_EQ(b.to_string(), frozen::kPhi4);
  EXPECT_EQ(b.m, 24);
  ASSERT_EQ(b.terms.size(), frozen::kPhi4Terms.size());
  for (std::size_t k = 0; k < b.terms.size(); ++k) {
    EXPECT_EQ(b.terms[k].display_name, frozen::kPhi4Terms[k].first);
    EXPECT_EQ(to_text(b.terms[k].display_coefficient), frozen::kPhi4Terms[k].second);
  }
}

TEST(Bch, LowerAndHigherClasses) {
  EXPECT_EQ(malcev::bch_truncated(2).to_string(), frozen::kPhi2);
  EXPECT_EQ(malcev::bch_truncated(1).m, 1);
  EXPECT_EQ(malcev::bch_truncated(3).m, 12);
  EXPECT_EQ(malcev::bch_truncated(5).m, 720);
  EXPECT_EQ(malcev::bch_truncated(6).m, 1440);
  EXPECT_THROW(malcev::bch_truncated(0), Error);
}

TEST(Bch, TruncationsAreConsistent) {
  auto b6 = malcev::bch_truncated(6);
  for (int c = 1; c < 6; ++c) {
    auto bc = malcev::bch_truncated(c);
    std::vector<std::pair<std::string, Rational>> low, direct;
    for (const auto& t : b6.terms)
      if (t.degree <= c) low.emplace_back(t.display_name, t.display_coefficient);
    for (const auto& t : bc.terms) direct.emplace_back(t.display_name, t.display_coefficient);
    EXPECT_EQ(low, direct) << c;
  }
}

TEST(GroupLaw, PinnedProduct) {
  const auto& q = lambda();
  const auto& G = group();
  auto p = G.mul(G.element(24 * q.element("x")), G.element(24 * q.element("y")));
  EXPECT_EQ(p.coords(), q.element(frozen::kProduct24Expr));
}

TEST(GroupLaw, ElementsMustLieInScaledLattice) {
  try {
    group().element(lambda().element("x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::input);
  }
}

TEST(Property, GroupAxioms) {
  const auto& G = group();
  const auto& alg = G.algebra();
  Sampler s(41);
  const auto e = G.identity();
  for (int t = 0; t < 200; ++t) {
    auto a = G.element(s.element(alg, -10, 10, 24));
    auto b = G.element(s.element(alg, -10, 10, 24));
    auto c = G.element(s.element(alg, -10, 10, 24));
    EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    EXPECT_EQ(G.mul(a, e), a);
    EXPECT_EQ(G.mul(e, a), a);
    EXPECT_EQ(G.mul(a, G.inverse(a)), e);
    EXPECT_EQ(G.inverse(a).coords(), -a.coords());
    auto u = s.element_of_weight_at_least(alg, 4, -10, 10, 24), v = s.element_of_weight_at_least(alg, 4, -10, 10, 24);
    EXPECT_EQ(G.mul(G.element(u), G.element(v)).coords(), u + v);
  }
}

TEST(Property, ProductAgreesToSecondOrder) {
  const auto& G = group();
  const auto& alg = G.algebra();
  Sampler s(42);
  for (int t = 0; t < 100; ++t) {
    auto a = s.element(alg, -10, 10, 24), b = s.element(alg, -10, 10, 24);
    auto d = G.mul(G.element(a), G.element(b)).coords() - a - b - Rational(1, 2) * bracket(a, b);
    EXPECT_TRUE(d.in_weight_at_least(3));
  }
}

TEST(Property, CommutatorsOfLengthFour) {
  const auto& G = group();
  const auto& alg = G.algebra();
  Sampler s(43);
  for (int t = 0; t < 100; ++t) {
    std::vector<malcev::GroupElement> xs;
    for (int k = 0; k < 4; ++k) xs.push_back(G.element(s.element(alg, -10, 10, 24)));
    EXPECT_TRUE(malcev::group_commutator_vs_lie(G, xs).equal);
  }
  const auto& q = lambda();
  auto x = G.element(24 * q.element("x")), y = G.element(24 * q.element("y"));
  auto r = malcev::group_commutator_vs_lie(G, {x, y, x, y});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lie_value, Rational(331776) * q.element("xyxy"));
}

TEST(Congruence, PinnedCases) {
  const auto& q = lambda();
  const auto& b = group().bch();
  auto r = malcev::limit_congruence(b, 24 * q.element("x"), 24 * q.element("y"), 2, 5);
  EXPECT_TRUE(r.ok);
  EXPECT_GE(r.min_sum, 4);
  EXPECT_EQ(r.min_sum, 4);
  EXPECT_EQ(r.min_commutator, 6);
  auto r2 = malcev::limit_congruence(b, 24 * q.element("y"), 24 * q.element("z"), 1, 7);
  EXPECT_TRUE(r2.ok);
  EXPECT_GE(r2.min_sum, 2);
}

TEST(Congruence, SmallPrimesAreUnsupported) {
  const auto& q = lambda();
  const auto& b = group().bch();
  for (unsigned long p : {2ul, 3ul}) {
    try {
      malcev::limit_congruence(b, q.element("x"), q.element("y"), 1, p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unsupported);
    }
  }
  EXPECT_THROW(malcev::limit_congruence(b, q.element("x"), q.element("y"), 1, 9), Error);
}

TEST(Property, CongruencesAcrossPrimesAndLevels) {
  const auto& q = lambda();
  const auto& b = group().bch();
  Sampler s(44);
  for (unsigned long p : {5ul, 7ul, 11ul})
    for (int k = 1; k <= 3; ++k)
      for (int t = 0; t < 5; ++t)
        EXPECT_TRUE(malcev::limit_congruence(b, s.element(q.algebra(), -6, 6), s.element(q.algebra(), -6, 6), k, p).ok);
}

TEST(Coset, LieAndGroupCosetsAgree) {
  const auto& q = lambda();
  Sampler s(45);
  for (unsigned long p : {5ul, 7ul}) {
    auto r = malcev::coset_check(group().bch(), s.element(q.algebra(), -4, 4), 1, 3, p, 30, 45);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.samples, 30u);
  }
}
