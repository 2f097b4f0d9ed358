#pragma once

#include "genform/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace genform {

struct SuiteConfig {
  std::string suite = "all";
  int n = 2;
  Rational k = 1;
  std::uint64_t seed = 0;
  int trials = 100;
  int max_degree = 2;
  int max_terms = 2;
};

struct Failure {
  int trial;
  std::string identity;
  std::string lhs;
  std::string rhs;
  std::string instance;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

extern const std::vector<std::string> kSuiteNames; // excludes "all"

bool is_known_suite(const std::string& name);

// Runs the named property family; throws std::invalid_argument on an
// unknown suite name or an invalid config.
SuiteReport run_suite(const SuiteConfig& config);

std::string render_report_text(const SuiteReport& report);
std::string render_report_json(const SuiteReport& report);

} // namespace genform
