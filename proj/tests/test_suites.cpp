#include "doctest.h"

#include "genform/suites.hpp"

using namespace genform;

TEST_CASE("every suite passes on a small grid") {
  for (const std::string& name : kSuiteNames) {
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.n = 2;
    cfg.k = Rational(-1, 2);
    cfg.seed = 42;
    cfg.trials = 5;
    SuiteReport rep = run_suite(cfg);
    INFO("suite ", name, ":\n", render_report_text(rep));
    CHECK(rep.passed());
  }
}

TEST_CASE("reports are seed-deterministic") {
  SuiteConfig cfg;
  cfg.suite = "jacobi";
  cfg.n = 3;
  cfg.seed = 7;
  cfg.trials = 10;
  CHECK(render_report_json(run_suite(cfg)) ==
        render_report_json(run_suite(cfg)));
  CHECK(render_report_text(run_suite(cfg)) ==
        render_report_text(run_suite(cfg)));
}

TEST_CASE("unknown suite is rejected") {
  SuiteConfig cfg;
  cfg.suite = "nosuch";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  CHECK(!is_known_suite("nosuch"));
  CHECK(is_known_suite("all"));
}

TEST_CASE("invalid configs are rejected") {
  SuiteConfig cfg;
  cfg.suite = "wedge";
  cfg.trials = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.k = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}
