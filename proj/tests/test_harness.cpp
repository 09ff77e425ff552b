#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cartbicat/report_io.hpp"
#include "cartbicat/suites/all.hpp"

using namespace cartbicat;

namespace {

std::string text_report(const GenConfig& cfg) {
  std::ostringstream os;
  write_text(os, cfg, suites::run_suites(cfg), false);
  return os.str();
}

Document set_doc(std::size_t n) {
  Document d;
  d.add_set("X", FinSet::range(n, "x"));
  return d;
}

}  // namespace

TEST_CASE("carrier sizes are uniform: 10000 draws at max 2 within 5 sigma") {
  Gen g(2024, 2);
  const std::size_t n = 10000;
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    auto c = g.carrier();
    REQUIRE(c <= 2);
    ++counts[c];
  }
  const double p = 1.0 / 3.0;
  const double sigma = std::sqrt(n * p * (1 - p));
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - n * p) <= 5 * sigma);
}

TEST_CASE("max carrier 0 draws only empty sets") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 0);
    CHECK(g.set("x").size() == 0);
    CHECK(g.carrier() == 0);
  }
}

TEST_CASE("per-trial seeds depend on seed, check id and trial") {
  CHECK(trial_seed(1, "a", 0) != trial_seed(2, "a", 0));
  CHECK(trial_seed(1, "a", 0) != trial_seed(1, "b", 0));
  CHECK(trial_seed(1, "a", 0) != trial_seed(1, "a", 1));
  CHECK(trial_seed(1, "a", 0) == trial_seed(1, "a", 0));
}

TEST_CASE("configuration is validated") {
  GenConfig c;
  c.instance = "groups";
  CHECK_THROWS_AS(validate(c), Error);
  c = GenConfig{};
  c.suites = {"kernel", "nosuch"};
  CHECK_THROWS_AS(validate(c), Error);
  c = GenConfig{};
  c.trials = 0;
  CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("identical configurations give identical reports, whatever the worker count") {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.trials = 30;
  cfg.max_carrier = 3;
  cfg.suites = {"kernel", "homprod", "groth"};
  ::setenv("BICAT_THREADS", "1", 1);
  const auto one = text_report(cfg);
  ::setenv("BICAT_THREADS", "3", 1);
  const auto three = text_report(cfg);
  ::unsetenv("BICAT_THREADS");
  CHECK(one == three);
  CHECK(thread_count() >= 1);
}

TEST_CASE("every suite passes at max carrier 0 on both instances") {
  for (const char* inst : {"span", "rel"}) {
    GenConfig cfg;
    cfg.instance = inst;
    cfg.max_carrier = 0;
    cfg.trials = 20;
    for (const auto& rep : suites::run_suites(cfg)) {
      INFO(inst << " " << rep.suite);
      for (const auto& c : rep.checks) {
        INFO(c.id << ": " << c.detail);
        CHECK(c.status != Status::fail);
      }
    }
  }
}

TEST_CASE("a failing property reports a shrunk, re-parseable counterexample") {
  Property p;
  p.id = "test.small";
  p.generate = [](Gen& g) -> std::optional<Document> { return set_doc(g.carrier()); };
  p.holds = [](const Document& d) { return d.set("X").size() < 3; };
  GenConfig cfg;
  cfg.max_carrier = 6;
  cfg.trials = 50;
  auto r = run_property(p, cfg);
  CHECK(r.status == Status::fail);
  CHECK(r.trials == 50);
  REQUIRE_FALSE(r.counterexample.empty());
  CHECK(Document::parse(r.counterexample).set("X").size() == 3);
  CHECK(evaluate_text(p, r.counterexample) == Verdict::fail);
}

TEST_CASE("negative controls, preconditions, generation failures and skips") {
  GenConfig cfg;
  cfg.trials = 10;

  Property neg;
  neg.id = "test.neg";
  neg.negative = true;
  neg.generate = [](Gen&) -> std::optional<Document> { return set_doc(2); };
  neg.holds = [](const Document& d) { return d.set("X").size() == 0; };
  auto r = run_property(neg, cfg);
  CHECK(r.status == Status::pass);
  CHECK(Document::parse(r.counterexample).set("X").size() == 1);

  neg.holds = [](const Document&) { return true; };
  CHECK(run_property(neg, cfg).status == Status::fail);
  CHECK(run_property(neg, cfg).detail == "corrupted input was not detected");

  Property pre;
  pre.id = "test.pre";
  pre.generate = [](Gen&) -> std::optional<Document> { return set_doc(1); };
  pre.holds = [](const Document&) -> bool {
    need(false, "never satisfied");
    return true;
  };
  auto rp = run_property(pre, cfg);
  CHECK(rp.status == Status::fail);
  CHECK(rp.detail.find("precondition") != std::string::npos);

  Property none;
  none.id = "test.none";
  none.generate = [](Gen&) -> std::optional<Document> { return std::nullopt; };
  none.holds = [](const Document&) { return true; };
  CHECK(run_property(none, cfg).status == Status::fail);

  Property skip;
  skip.id = "test.skip";
  skip.skip_reason = "not built";
  CHECK(run_property(skip, cfg).status == Status::skipped);
}

TEST_CASE("carrier bounds are clamped per property") {
  Property p;
  p.id = "test.clamp";
  p.floor = 2;
  p.cap = 3;
  std::size_t seen = 0;
  p.enumerate = [&](std::size_t max) {
    seen = max;
    return std::vector<Document>{set_doc(0)};
  };
  p.holds = [](const Document&) { return true; };
  GenConfig cfg;
  cfg.max_carrier = 0;
  run_property(p, cfg);
  CHECK(seen == 2);
  cfg.max_carrier = 9;
  run_property(p, cfg);
  CHECK(seen == 3);
}

TEST_CASE("machine report has config, one line per check, summary") {
  GenConfig cfg;
  cfg.trials = 5;
  cfg.max_carrier = 2;
  cfg.suites = {"kernel"};
  auto reps = suites::run_suites(cfg);
  std::ostringstream os;
  write_machine(os, cfg, reps, false);
  std::istringstream in(os.str());
  std::vector<nlohmann::json> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(nlohmann::json::parse(l));
  REQUIRE(lines.size() == reps[0].checks.size() + 2);
  CHECK(lines.front()["type"] == "config");
  CHECK(lines.back()["type"] == "summary");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    CHECK(lines[i]["type"] == "check");
    CHECK_FALSE(lines[i].contains("wall_ms"));
    if (!lines[i]["counterexample"].is_null())
      CHECK_NOTHROW(Document::parse(lines[i]["counterexample"].get<std::string>()));
  }
}
