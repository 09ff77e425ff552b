#include <catch_amalgamated.hpp>

#include "cartbicat/suites/all.hpp"

using namespace cartbicat;

#ifndef CARTBICAT_SOURCE_DIR
#define CARTBICAT_SOURCE_DIR "."
#endif

TEST_CASE("every suite has a negative control and passes at carriers <= 3") {
  for (const char* inst : {"span", "rel"}) {
    GenConfig cfg;
    cfg.instance = inst;
    cfg.trials = 30;
    cfg.max_carrier = 3;
    cfg.seed = 4;
    for (const auto& rep : suites::run_suites(cfg)) {
      INFO(inst << " " << rep.suite);
      const auto* neg = rep.find(rep.suite + ".negative-control");
      REQUIRE(neg != nullptr);
      CHECK(neg->status == Status::pass);
      CHECK_NOTHROW(Document::parse(neg->counterexample));
      for (const auto& c : rep.checks) {
        INFO(c.id << ": " << c.detail << "\n" << c.counterexample);
        CHECK(c.status != Status::fail);
        CHECK(c.id.rfind(rep.suite + ".", 0) == 0);
      }
    }
  }
}

TEST_CASE("the suite filter selects suites in canonical order") {
  GenConfig cfg;
  cfg.trials = 5;
  cfg.max_carrier = 1;
  cfg.suites = {"monoidal", "kernel"};
  auto reps = suites::run_suites(cfg);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].suite == "kernel");
  CHECK(reps[1].suite == "monoidal");
}

TEST_CASE("property lookup by id") {
  CHECK(suites::find_property("kernel.interchange", "span").has_value());
  CHECK_FALSE(suites::find_property("kernel.nosuch", "span").has_value());
  CHECK_FALSE(suites::find_property("nosuch.x", "rel").has_value());
  CHECK_FALSE(suites::find_property("noprefix", "rel").has_value());
}

TEST_CASE("good fixtures pass, corrupt fixtures fail with a counterexample") {
  GenConfig cfg;
  const std::string root = CARTBICAT_SOURCE_DIR;
  auto good = suites::run_fixtures(root + "/fixtures/good", cfg);
  auto bad = suites::run_fixtures(root + "/fixtures/corrupt", cfg);
  REQUIRE(good.checks.size() == 14);
  REQUIRE(bad.checks.size() == 14);
  for (const auto& c : good.checks) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.status == Status::pass);
  }
  for (const auto& c : bad.checks) {
    INFO(c.id);
    CHECK(c.status == Status::fail);
    auto d = Document::parse(c.counterexample);
    auto id = directive_value(d, "check");
    REQUIRE(id.has_value());
    auto p = suites::find_property(*id, directive_value(d, "instance").value_or("span"));
    REQUIRE(p.has_value());
    CHECK(evaluate(*p, d) == Verdict::fail);
  }
}

TEST_CASE("missing fixture paths are I/O errors") {
  GenConfig cfg;
  try {
    suites::run_fixtures("/nonexistent/fixtures", cfg);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io_error);
  }
}
