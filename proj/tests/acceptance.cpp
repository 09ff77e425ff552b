// Acceptance gate: one pass/fail line per criterion, exit status 0 iff all pass.
//
// Every suite runs once per instance at max-size 4, 500 trials. Each criterion
// then looks up its checks and asks for: status pass, enough trials for sampled
// checks, a carrier bound that reaches the required size, and a wall-time budget.
// All comparisons in the checks are exact; there is no tolerance to tune.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cartbicat/suites/all.hpp"

namespace {

using namespace cartbicat;
using cartbicat::suites::find_property;

constexpr double tolerance = 0.0;  // exact equality everywhere
constexpr std::size_t run_max = 4;
constexpr std::size_t run_trials = 500;
constexpr std::uint64_t run_seed = 1;
const std::vector<std::string> instances = {"span", "rel"};

struct Run {
  std::map<std::string, CheckResult> checks;  // by id
  double wall_s = 0.0;
};

std::map<std::string, Run> runs;  // by instance

struct Req {
  std::string id;
  std::size_t max;         // carrier bound the check must reach
  std::size_t min_trials;  // 0 for enumerated checks
};

struct Grade {
  bool ok = true;
  std::vector<std::string> notes;
  double ms = 0.0;

  void fail(std::string why) {
    ok = false;
    notes.push_back(std::move(why));
  }
};

std::size_t effective_max(const Property& p) { return std::clamp(run_max, p.floor, std::max(p.floor, p.cap)); }

void require_checks(Grade& v, const std::vector<Req>& reqs) {
  for (const auto& inst : instances)
    for (const auto& r : reqs) {
      const auto where = r.id + " [" + inst + "]";
      auto p = find_property(r.id, inst);
      auto it = runs[inst].checks.find(r.id);
      if (!p || it == runs[inst].checks.end()) {
        v.fail(where + ": not run");
        continue;
      }
      const auto& c = it->second;
      v.ms += c.wall_ms;
      if (c.status != Status::pass) v.fail(where + ": " + to_string(c.status) + " " + c.detail);
      if (effective_max(*p) < r.max)
        v.fail(where + ": carrier bound " + std::to_string(effective_max(*p)) + " < " + std::to_string(r.max));
      if (r.min_trials == 0 && !p->enumerate) v.fail(where + ": expected an exhaustive check");
      if (c.trials < std::max<std::size_t>(r.min_trials, 1))
        v.fail(where + ": " + std::to_string(c.trials) + " trials < " + std::to_string(r.min_trials));
    }
}

void budget(Grade& v, double limit_s) {
  if (v.ms / 1000.0 >= limit_s) {
    std::ostringstream os;
    os << "took " << v.ms / 1000.0 << "s, budget " << limit_s << "s";
    v.fail(os.str());
  }
}

void report(int n, const std::string& what, const Grade& v) {
  std::cout << "criterion " << n << ": " << (v.ok ? "pass" : "fail") << " -- " << what;
  if (v.ms > 0) std::cout << " (" << static_cast<long long>(v.ms) << " ms)";
  std::cout << "\n";
  for (const auto& note : v.notes) std::cout << "    " << note << "\n";
}

// A counterexample must parse, name a known check, and still fail it.
bool reparse_fails(const std::string& text, const std::string& instance, std::string* why) {
  try {
    auto d = Document::parse(text);
    auto id = directive_value(d, "check");
    if (!id) {
      *why = "no #!check directive";
      return false;
    }
    auto p = find_property(*id, directive_value(d, "instance").value_or(instance));
    if (!p) {
      *why = "unknown check " + *id;
      return false;
    }
    if (evaluate_text(*p, text) != cartbicat::Verdict::fail) {
      *why = "re-parsed input does not fail " + *id;
      return false;
    }
    return true;
  } catch (const std::exception& e) {
    *why = e.what();
    return false;
  }
}

}  // namespace

int main() {
  std::cout << "acceptance: max-size=" << run_max << " trials=" << run_trials << " seed=" << run_seed
            << " tolerance=" << tolerance << " threads=" << thread_count() << "\n";
  for (const auto& inst : instances) {
    GenConfig cfg;
    cfg.seed = run_seed;
    cfg.max_carrier = run_max;
    cfg.trials = run_trials;
    cfg.instance = inst;
    const auto t0 = std::chrono::steady_clock::now();
    auto reps = suites::run_suites(cfg);
    runs[inst].wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& rep : reps)
      for (const auto& c : rep.checks) runs[inst].checks[c.id] = c;
  }

  bool all = true;
  auto done = [&](int n, const std::string& what, const Grade& v) {
    report(n, what, v);
    all = all && v.ok;
  };

  {
    Grade v;
    require_checks(v, {{"kernel.interchange", 4, 500}, {"kernel.mate-involution", 4, 500}, {"kernel.triangle", 4, 500}});
    budget(v, 30);
    done(1, "interchange, mate involution, triangle on 500 configs per instance, carriers <= 4", v);
  }
  {
    Grade v;
    require_checks(v, {{"mapprod.cone-binary", 3, 0},
                       {"mapprod.cone-nullary", 0, 0},
                       {"mapprod.cone-ternary", 2, 0},
                       {"homprod.local-product-universal", 3, 500},
                       {"homprod.local-terminal-universal", 3, 500}});
    budget(v, 30);
    done(2, "canonical binary/nullary/ternary cones; local products and terminals, carriers <= 3", v);
  }
  {
    Grade v;
    require_checks(v, {{"groth.pair-exists", 3, 200},
                       {"groth.pair-roundtrip", 3, 200},
                       {"groth.pair-unique-bruteforce", 2, 200},
                       {"groth.fill-cell", 3, 200},
                       {"groth.terminal", 3, 200}});
    done(3, "products in G: existence, uniqueness (brute force <= 2), fill on >= 200 instances", v);
  }
  {
    Grade v;
    require_checks(v, {{"lax.assoc-axiom", 3, 100}, {"lax.unit-axioms", 3, 100}, {"lax.naturality", 3, 100}});
    done(4, "lax monoidal axioms and naturality on >= 100 inputs", v);
  }
  {
    Grade v;
    require_checks(v, {{"cartesian.tensor-unit-invertible", 4, 0},
                       {"cartesian.tensor-comp-invertible", 4, 100},
                       {"cartesian.unit-invertible", 0, 0},
                       {"cartesian.m-invertible-exhaustive", 3, 0},
                       {"cartesian.m-invertible-sampled", 4, 100}});
    done(5, "tensor unit/composition comparisons and m' invertible, carriers <= 4", v);
  }
  {
    Grade v;
    require_checks(v, {{"cartesian.spiso", 4, 200},
                       {"cartesian.prebeck", 4, 200},
                       {"cartesian.xi", 3, 200},
                       {"cartesian.xi-star", 3, 200},
                       {"cartesian.strange-iso-exhaustive", 3, 0},
                       {"cartesian.strange-hom-bijection", 3, 0}});
    done(6, "spiso, prebeck, xi isos on >= 200 configs; strange hom-bijection exhaustive, carriers <= 3", v);
  }
  {
    Grade v;
    require_checks(v, {{"monoidal.syllepsis-equations", 3, 0},
                       {"monoidal.pi-equations", 3, 0},
                       {"monoidal.symmetry", 4, 0},
                       {"monoidal.pentagon", 2, 0},
                       {"monoidal.pi-modification", 2, 100}});
    double full = 0;
    for (const auto& inst : instances) full += runs[inst].wall_s;
    if (full >= 300) v.fail("full suite took " + std::to_string(full) + "s, budget 300s");
    for (const auto& inst : instances)
      for (const auto& [id, c] : runs[inst].checks)
        if (c.status == Status::fail) v.fail(id + " [" + inst + "]: " + c.detail);
    std::ostringstream what;
    what << "syllepsis, pi, symmetry, pentagon, pi-modification; full suite on both instances in "
         << static_cast<long long>(full) << " s";
    done(7, what.str(), v);
  }
  {
    Grade v;
    for (const auto& inst : instances)
      for (const auto& suite : all_suite_names()) {
        const auto id = suite + ".negative-control";
        auto it = runs[inst].checks.find(id);
        if (it == runs[inst].checks.end()) {
          v.fail(id + " [" + inst + "]: missing");
          continue;
        }
        const auto& c = it->second;
        std::string why;
        if (c.status != Status::pass) v.fail(id + " [" + inst + "]: " + c.detail);
        else if (c.counterexample.empty()) v.fail(id + " [" + inst + "]: no counterexample printed");
        else if (!reparse_fails(c.counterexample, inst, &why)) v.fail(id + " [" + inst + "]: " + why);
      }
    // Hand-kept corrupted fixtures, one per suite and instance.
    GenConfig cfg;
    const auto dir = std::filesystem::path(CARTBICAT_SOURCE_DIR) / "fixtures" / "corrupt";
    try {
      auto rep = suites::run_fixtures(dir, cfg);
      std::map<std::string, int> per_suite;
      for (const auto& c : rep.checks) {
        std::string why;
        if (c.status != Status::fail) v.fail(c.id + ": corrupted fixture passed");
        else if (!reparse_fails(c.counterexample, cfg.instance, &why)) v.fail(c.id + ": " + why);
        else ++per_suite[c.id.substr(std::string("fixture:").size(), c.id.find('-') - std::string("fixture:").size())];
      }
      for (const auto& suite : all_suite_names())
        if (per_suite[suite] == 0) v.fail("no failing corrupted fixture for suite " + suite);
    } catch (const std::exception& e) {
      v.fail(std::string("fixtures: ") + e.what());
    }
    done(8, "every suite rejects corrupted inputs with a re-parseable counterexample", v);
  }

  std::cout << "acceptance: " << (all ? "pass" : "fail") << "\n";
  return all ? 0 : 1;
}
