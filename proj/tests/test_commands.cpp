#include <gtest/gtest.h>

#include <json.hpp>

#include "frozen.hpp"
#include "nilzeta/commands.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/free_lie.hpp"
#include "nilzeta/json_export.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/zeta.hpp"

using namespace nilzeta;
using cli::RunConfig;

namespace {

Errc code_of(const std::string& sub, const RunConfig& cfg) {
  try {
    cli::run(sub, cfg);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << sub;
  return Errc::invariant;
}

}  // namespace

TEST(Commands, CheapSubcommandsPass) {
  for (const char* sub : {"basis", "structure", "ideal", "lambda", "bch", "theta", "zeta", "funceq"}) {
    auto r = cli::run(sub, RunConfig{});
    EXPECT_TRUE(r.passed()) << sub << "\n" << r.text();
    EXPECT_FALSE(r.checks.empty()) << sub;
  }
}

TEST(Commands, HeaderCarriesSeedAndOutputIsDeterministic) {
  RunConfig cfg;
  cfg.seed = 1234;
  auto a = cli::run("group-law", cfg), b = cli::run("group-law", cfg);
  EXPECT_NE(a.text().find("seed=1234"), std::string::npos);
  EXPECT_EQ(a.text(), b.text());
  EXPECT_EQ(a.json(), b.json());
  EXPECT_TRUE(a.passed());
}

TEST(Commands, BasisListsHallOrder) {
  auto r = cli::run("basis", RunConfig{});
  ASSERT_EQ(r.lines.size(), 32u);
  for (std::size_t k = 0; k < 32; ++k) EXPECT_NE(r.lines[k].find(" " + frozen::kHallNames[k] + " "), std::string::npos);
}

TEST(Commands, OtherFreeAlgebras) {
  RunConfig cfg;
  cfg.n = 2;
  cfg.c = 5;
  EXPECT_TRUE(cli::run("basis", cfg).passed());
  EXPECT_TRUE(cli::run("structure", cfg).passed());
  EXPECT_TRUE(cli::run("bch", cfg).passed());
}

TEST(Commands, ZetaOutput) {
  auto r = cli::run("zeta", RunConfig{});
  EXPECT_NE(r.text().find(frozen::kZetaLatex), std::string::npos);
  EXPECT_EQ(r.text().find("conjectural"), std::string::npos);
  RunConfig small;
  small.prime = 3;
  EXPECT_NE(cli::run("zeta", small).text().find("conjectural for p ≤ 3"), std::string::npos);
}

TEST(Commands, FunctionalEquationVerdicts) {
  auto r = cli::run("funceq", RunConfig{});
  EXPECT_NE(r.text().find(frozen::kNoFunctionalEquation), std::string::npos);
  RunConfig cfg;
  cfg.input = "1/((1-t)*(1-q*t))";
  auto r2 = cli::run("funceq", cfg);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.data["functional_equation"]["b"], 1);
  cfg.input = "1/(1-";
  EXPECT_EQ(code_of("funceq", cfg), Errc::input);
}

TEST(Commands, Validation) {
  RunConfig cfg;
  EXPECT_EQ(code_of("nope", cfg), Errc::input);
  cfg.prime = 4;
  EXPECT_EQ(code_of("zeta", cfg), Errc::input);
  cfg.prime = 3;
  EXPECT_EQ(code_of("group-law", cfg), Errc::unsupported);
  EXPECT_EQ(code_of("theta-oracle", cfg), Errc::unsupported);
  cfg = RunConfig{};
  cfg.degree = 5;
  EXPECT_EQ(code_of("zeta", cfg), Errc::input);
  cfg = RunConfig{};
  cfg.level = 0;
  EXPECT_EQ(code_of("theta-oracle", cfg), Errc::input);
  cfg = RunConfig{};
  cfg.ff_order = 4;
  EXPECT_EQ(code_of("aut-classify", cfg), Errc::input);
  cfg = RunConfig{};
  cfg.n = 6;
  cfg.c = 6;
  EXPECT_EQ(code_of("basis", cfg), Errc::input);
}

TEST(Commands, JsonIsValid) {
  auto r = cli::run("lambda", RunConfig{});
  auto j = nlohmann::json::parse(r.json());
  EXPECT_EQ(j["command"], "lambda");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["data"]["lambda"]["basis"].size(), 25u);
  EXPECT_EQ(j["data"]["lambda"]["projection"].size(), 32u);
  EXPECT_EQ(j["data"]["lambda"]["ideal_basis"].size(), 7u);
}

TEST(Export, AlgebraSchema) {
  free_lie::FreeNilpotentAlgebra f(3, 4);
  auto j = json::algebra(*f.algebra());
  ASSERT_EQ(j["basis"].size(), 32u);
  EXPECT_EQ(j["basis"][14]["name"], "(ZX)(YX)");
  EXPECT_EQ(j["basis"][14]["weight"], 4);
  EXPECT_EQ(j["basis"][14]["ordinal"], 15);
  EXPECT_EQ(j["basis"][14]["multidegree"], nlohmann::json::array({2, 1, 1}));
  // [Y, X] = YX, ordinals 2, 1 -> stored as i < j with a negative sign
  bool found = false;
  for (const auto& e : j["tensor"])
    if (e["i"] == 1 && e["j"] == 2) {
      found = true;
      EXPECT_EQ(e["coeffs"], nlohmann::json::parse(R"([[4, "-1/1"]])"));
    }
  EXPECT_TRUE(found);
}

TEST(Export, RationalFunctionSchema) {
  auto j = json::rational_function(zeta::stated_zeta());
  EXPECT_EQ(j["variable"], "t");
  EXPECT_EQ(j["numerator"].size(), 4u);
  EXPECT_EQ(j["numerator"][0], nlohmann::json::parse(R"([0, 0, "1"])"));
  EXPECT_EQ(j["text"], frozen::kZetaText);
}
