#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "nilzeta/nilzeta.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  nilzeta_config cfg;
  nilzeta_config_init(&cfg);

  std::vector<std::string> names;
  for (size_t i = 0; i < nilzeta_subcommand_count(); ++i) names.emplace_back(nilzeta_subcommand_name(i));

  CLI::App app{"Nilpotent Lie lattices, their automorphism groups and local zeta functions."};
  std::string sub, input = "zeta";
  bool json = false, info = false;
  app.add_option("subcommand", sub, "What to run")->required()->check(CLI::IsMember(names));
  app.add_option("--n", cfg.n, "Number of generators (basis, structure)")->capture_default_str();
  app.add_option("--c", cfg.c, "Nilpotency class (basis, structure, bch)")->capture_default_str();
  app.add_option("--prime,-p", cfg.prime, "Prime p")->capture_default_str();
  app.add_option("--level,-K", cfg.level, "Finite level K for the counting oracle")->capture_default_str();
  app.add_option("--degree,-D", cfg.degree, "Series degree D")->capture_default_str();
  app.add_option("--ff-order", cfg.ff_order, "Finite field order q for aut-classify")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0: available parallelism)")->capture_default_str();
  app.add_option("--input", input, "funceq: 'zeta' or a rational function in q and t")->capture_default_str();
  app.add_flag("--json", json, "Emit JSON");
  app.add_flag("--informational", info, "verify-all: also classify over F_7");
  app.footer("Subcommands: basis structure ideal lambda bch group-law aut-check aut-classify theta theta-oracle zeta "
             "funceq verify-all\nExit status: 0 success, 1 verification failure, 2 usage error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.json = json ? 1 : 0;
  cfg.informational = info ? 1 : 0;
  cfg.input = input.c_str();

  nilzeta_report* report = nullptr;
  nilzeta_status st = nilzeta_run(sub.c_str(), &cfg, &report);
  if (st != NILZETA_OK && st != NILZETA_VERIFICATION_FAILED) {
    std::fprintf(stderr, "nilzeta: %s\n", nilzeta_last_error());
    if (st == NILZETA_ERR_INVARIANT || st == NILZETA_ERR_INTERNAL) return kExitFailure;
    return kExitUsage;
  }
  std::fputs(nilzeta_report_output(report), stdout);
  if (cfg.json) std::fputc('\n', stdout);
  bool passed = nilzeta_report_passed(report);
  nilzeta_report_free(report);
  return passed ? 0 : kExitFailure;
}
