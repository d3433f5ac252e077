#include <gtest/gtest.h>

#include <algorithm>

#include "nilzeta/error.hpp"
#include "nilzeta/linalg.hpp"
#include "nilzeta/rational.hpp"
#include "nilzeta/sampling.hpp"

using namespace nilzeta;

TEST(Rational, Valuations) {
  EXPECT_EQ(valuation(Rational(50), 5), 2);
  EXPECT_EQ(valuation(Rational(3, 125), 5), -3);
  EXPECT_EQ(valuation(Rational(0), 5), kInfiniteValuation);
  EXPECT_TRUE(is_p_integral(Rational(1, 3), 5));
  EXPECT_FALSE(is_p_integral(Rational(1, 5), 5));
}

TEST(Rational, Primes) {
  std::vector<unsigned long> primes;
  for (unsigned long n = 0; n < 30; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Rational, TextForms) {
  EXPECT_EQ(to_json_string(Rational(3)), "3/1");
  EXPECT_EQ(to_json_string(Rational(-1, 12)), "-1/12");
  EXPECT_EQ(to_text(Rational(-1, 12)), "-1/12");
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, Powers) {
  EXPECT_EQ(ipow(Integer(7), 3), 343);
  EXPECT_EQ(rpow(Rational(2, 3), -2), Rational(9, 4));
}

namespace {

IntMatrix random_int_matrix(Sampler& s, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, std::vector<Integer>(cols));
  for (auto& r : m)
    for (auto& x : r) x = s.integer(lo, hi);
  return m;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t last = 0;
  bool first = true;
  for (std::size_t r = 0; r < h.size(); ++r) {
    auto it = std::find_if(h[r].begin(), h[r].end(), [](const Integer& x) { return x != 0; });
    if (it == h[r].end()) return false;
    std::size_t piv = it - h[r].begin();
    if (!first && piv <= last) return false;
    if (*it <= 0) return false;
    for (std::size_t a = 0; a < r; ++a)
      if (h[a][piv] < 0 || h[a][piv] >= *it) return false;
    last = piv;
    first = false;
  }
  return true;
}

}  // namespace

TEST(Hnf, ShapeAndUniquenessUnderRowOperations) {
  Sampler s(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = s.integer(1, 6), cols = s.integer(1, 6);
    auto m = random_int_matrix(s, rows, cols, -9, 9);
    auto h = hermite_normal_form(m, cols);
    ASSERT_TRUE(is_hnf(h));
    auto m2 = m;
    std::reverse(m2.begin(), m2.end());
    std::size_t i = s.integer(0, rows - 1), j = s.integer(0, rows - 1);
    if (i != j) {
      long k = s.integer(-4, 4);
      for (std::size_t c = 0; c < cols; ++c) m2[i][c] += k * m2[j][c];
    }
    m2.push_back(std::vector<Integer>(cols, 0));
    EXPECT_EQ(hermite_normal_form(m2, cols), h);
    EXPECT_EQ(h.size(), rank(to_rational(m)));
    for (const auto& row : m) {
      auto rem = hnf_reduce(h, row);
      EXPECT_TRUE(std::all_of(rem.begin(), rem.end(), [](const Integer& x) { return x == 0; }));
    }
  }
}

TEST(Hnf, DetectsNonMembers) {
  IntMatrix h = hermite_normal_form({{2, 0}, {0, 3}}, 2);
  auto rem = hnf_reduce(h, {1, 0});
  EXPECT_NE(rem[0], 0);
}

TEST(Linalg, DeterminantIsMultiplicative) {
  Sampler s(12);
  for (int t = 0; t < 100; ++t) {
    auto a = to_rational(random_int_matrix(s, 4, 4, -5, 5));
    auto b = to_rational(random_int_matrix(s, 4, 4, -5, 5));
    EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
  }
}

TEST(Linalg, InverseAndSolve) {
  Sampler s(13);
  for (int t = 0; t < 100; ++t) {
    auto a = to_rational(random_int_matrix(s, 4, 4, -5, 5));
    auto inv = inverse(a);
    if (determinant(a) == 0) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(multiply(a, *inv), identity_matrix(4));
    std::vector<Rational> x(4);
    for (auto& v : x) v = s.rational(-5, 5, 3);
    auto b = row_times(x, a);
    auto sol = solve_left(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(*sol, x);
  }
}

TEST(Linalg, InconsistentSolve) {
  RatMatrix a = {{1, 0}, {2, 0}};
  EXPECT_FALSE(solve_left(a, {0, 1}).has_value());
}
