#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilzeta/json_export.hpp"
#include "nilzeta/sampling.hpp"

namespace nilzeta::cli {

struct RunConfig {
  int n = 3;
  int c = 4;
  unsigned long prime = 5;
  int level = 4;
  int degree = 30;
  unsigned long ff_order = 5;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  unsigned workers = 0;  // 0: available parallelism
  std::string input = "zeta";
  bool informational = false;  // verify-all: add the q = 7 classification
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::string command;
  std::string header;
  std::vector<std::string> lines;
  std::vector<Check> checks;
  json::Json data = json::Json::object();
  bool timed = false;

  bool passed() const;
  std::string text() const;
  std::string json() const;
};

const std::vector<std::string>& subcommands();

/// Throws Error(input) on an invalid configuration for the subcommand.
void validate(const std::string& subcommand, const RunConfig& cfg);

/// Runs one subcommand; throws Error for usage problems.
Report run(const std::string& subcommand, const RunConfig& cfg);

unsigned effective_workers(const RunConfig& cfg);

}  // namespace nilzeta::cli
