#include <gtest/gtest.h>

#include "frozen.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/sampling.hpp"

using namespace nilzeta;
using lattice::QuotientLattice;

namespace {

const QuotientLattice& lambda() {
  static const QuotientLattice q = lattice::build_lambda();
  return q;
}

}  // namespace

TEST(Ideal, RankSeven) {
  const auto& q = lambda();
  EXPECT_EQ(q.ideal().rank(), 7u);
  auto listed = lattice::listed_ideal_basis(q.free());
  EXPECT_EQ(listed.size(), 7u);
  EXPECT_EQ(lattice::integer_span(q.ambient(), listed), q.ideal().basis());
}

TEST(Ideal, ClosureOfSingleGeneratorInClassTwo) {
  free_lie::FreeNilpotentAlgebra f(2, 2);
  auto ideal = lattice::ideal_closure(f.algebra(), {f.generator(0)});
  EXPECT_EQ(ideal.rank(), 2u);
  EXPECT_TRUE(ideal.contains(f.normal_form("YX")));
  EXPECT_FALSE(ideal.contains(f.generator(1)));
}

TEST(Ideal, RejectsNonIntegralGenerators) {
  free_lie::FreeNilpotentAlgebra f(2, 2);
  try {
    lattice::ideal_closure(f.algebra(), {Rational(1, 2) * f.generator(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::input);
  }
}

TEST(Ideal, Membership) {
  const auto& q = lambda();
  const auto& f = q.free();
  EXPECT_TRUE(lattice::membership(q.ideal(), f.normal_form("YZYZ - YZZY")));
  EXPECT_TRUE(lattice::membership(q.ideal(), f.normal_form("YZYZ + ZYZY")));
  EXPECT_TRUE(lattice::membership(q.ideal(), f.normal_form("YXXX - YZY")));
  EXPECT_FALSE(lattice::membership(q.ideal(), f.normal_form("YXXX")));
  EXPECT_FALSE(lattice::membership(q.ideal(), f.normal_form("X")));
}

TEST(Lambda, BasisAndRanks) {
  const auto& q = lambda();
  ASSERT_EQ(q.rank(), 25u);
  for (std::size_t k = 0; k < 25; ++k) EXPECT_EQ(q.algebra()->basis(k).name, frozen::kLambdaWords[k]);
  EXPECT_EQ(abs(q.complement_determinant()), 1);
  EXPECT_EQ(lattice::graded_ranks(q.algebra()), (std::vector<std::size_t>{3, 3, 6, 13}));
  EXPECT_EQ(lattice::lower_central_ranks(q.algebra()), (std::vector<std::size_t>{25, 22, 19, 13, 0}));
}

TEST(Lambda, RecordedIdentities) {
  const auto& q = lambda();
  EXPECT_TRUE((q.element("2xyzy") - q.element("xzyy") - q.element("xyyz")).is_zero());
  EXPECT_EQ(q.element("2xzyz"), q.element("xyzz + xzzy"));
  EXPECT_EQ(q.element("yzyx"), q.element("-2xyzy + xzyy + xyyz"));
  EXPECT_EQ(q.element("zyzx"), q.element("-2xzyz + xyzz + xzzy"));
  EXPECT_EQ(q.element("yxxx"), q.element("yzy"));
}

TEST(Lambda, SameWeightExpansions) {
  const auto& q = lambda();
  auto md = [&](const std::string& name) { return q.algebra()->basis(*q.algebra()->find(name)).multidegree; };
  for (const auto& [k, c] : q.element("yzyx").coeffs()) EXPECT_EQ(q.algebra()->basis(k).multidegree, md("xyyz"));
  for (const auto& [k, c] : q.element("zyzx").coeffs()) EXPECT_EQ(q.algebra()->basis(k).multidegree, md("xzzy"));
  auto rep = lattice::same_weight_check(q);
  EXPECT_EQ(rep.rows.size(), 81u);
  EXPECT_EQ(rep.violations(), 0u);
}

TEST(Lambda, StructureIsIntegralAndFiltered) {
  const auto& q = lambda();
  const auto& alg = *q.algebra();
  auto sc = free_lie::check_structure(alg, false);
  EXPECT_TRUE(sc.ok());
  for (std::size_t i = 0; i < 25; ++i)
    for (std::size_t j = 0; j < 25; ++j)
      for (const auto& [k, c] : alg.structure(i, j)) {
        EXPECT_TRUE(is_integer(c));
        EXPECT_GE(alg.basis(k).weight, alg.basis(i).weight + alg.basis(j).weight);
      }
}

TEST(Property, ProjectionIsAHomomorphism) {
  const auto& q = lambda();
  Sampler s(31);
  for (int t = 0; t < 100; ++t) {
    auto a = s.element(q.ambient(), -5, 5), b = s.element(q.ambient(), -5, 5);
    EXPECT_EQ(q.project(bracket(a, b)), bracket(q.project(a), q.project(b)));
    EXPECT_EQ(q.project(a + b), q.project(a) + q.project(b));
    auto v = s.element(q.algebra(), -5, 5);
    EXPECT_EQ(q.project(q.lift(v)), v);
  }
}

TEST(Property, IdealProjectsToZero) {
  const auto& q = lambda();
  Sampler s(32);
  auto basis = q.ideal().basis_elements();
  for (int t = 0; t < 100; ++t) {
    LieElement v(q.ambient());
    for (const auto& b : basis) v += Rational(s.integer(-6, 6)) * b;
    v = bracket(v, s.element(q.ambient(), -3, 3)) + v;
    EXPECT_TRUE(q.project(v).is_zero());
    EXPECT_TRUE(q.ideal().contains(v));
  }
}

TEST(Lambda, ErrorsOnUnknownNames) {
  EXPECT_THROW(lambda().basis_element("yzy"), Error);
  EXPECT_THROW(lambda().element("w"), Error);
}
