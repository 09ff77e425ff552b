#pragma once

// Property runner: seeded generation, parallel evaluation, greedy shrinking.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "gen.hpp"
#include "interchange.hpp"
#include "report.hpp"

namespace cartbicat {

inline const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {"kernel", "homprod", "mapprod", "groth",
                                                 "lax",    "cartesian", "monoidal"};
  return names;
}

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_carrier = 3;
  std::size_t trials = 100;
  std::string instance = "span";
  std::vector<std::string> suites = all_suite_names();
};

inline void validate(const GenConfig& c) {
  require(c.trials > 0, ErrorKind::invalid_config, "trials must be positive");
  require(c.instance == "span" || c.instance == "rel", ErrorKind::invalid_config,
          "instance must be span or rel, got '" + c.instance + "'");
  require(!c.suites.empty(), ErrorKind::invalid_config, "no suites selected");
  const auto& known = all_suite_names();
  for (const auto& s : c.suites)
    require(std::find(known.begin(), known.end(), s) != known.end(), ErrorKind::invalid_config,
            "unknown suite '" + s + "'");
}

// Thrown by a property when a (typically shrunk) input does not satisfy its
// precondition. Such inputs neither pass nor fail.
struct Precondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void need(bool cond, const char* what) {
  if (!cond) throw Precondition(what);
}

enum class Verdict { pass, fail, invalid };

struct Property {
  std::string id;
  // Random input for one trial; nullopt asks for a resample.
  std::function<std::optional<Document>(Gen&)> generate;
  // Deterministic input list, used instead of generate when set.
  std::function<std::vector<Document>(std::size_t max_carrier)> enumerate;
  std::function<bool(const Document&)> holds;
  // Effective carrier bound is clamp(config, floor, cap).
  std::size_t floor = 0;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  // Upper bound on generated trials, whatever the configuration asks for.
  std::size_t max_trials = std::numeric_limits<std::size_t>::max();
  // A negative control passes when every input fails.
  bool negative = false;
  std::string fail_detail = "property does not hold";
  std::string skip_reason;
};

inline std::size_t thread_count() {
  if (const char* s = std::getenv("BICAT_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
}

inline Verdict evaluate(const Property& p, const Document& d, std::string* why = nullptr) {
  try {
    return p.holds(d) ? Verdict::pass : Verdict::fail;
  } catch (const Precondition& e) {
    if (why) *why = e.what();
    return Verdict::invalid;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return Verdict::fail;
  }
}

inline Verdict evaluate_text(const Property& p, const std::string& text) {
  std::optional<Document> d;
  try {
    d = Document::parse(text);
  } catch (const Error&) {
    return Verdict::invalid;
  }
  return evaluate(p, *d);
}

// Greedy one-element deletion until no deletion keeps the input failing.
inline std::string shrink(const Property& p, std::string text) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& cand : one_element_deletions(text)) {
      if (evaluate_text(p, cand) == Verdict::fail) {
        text = std::move(cand);
        changed = true;
        break;
      }
    }
  }
  return text;
}

// Calls f(i) for i in [0, n) on the worker pool.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::size_t k = std::min(thread_count(), n);
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

inline CheckResult run_property(const Property& p, const GenConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = p.id;
  if (!p.skip_reason.empty()) {
    r.status = Status::skipped;
    r.detail = p.skip_reason;
    return r;
  }
  const std::size_t max = std::clamp(cfg.max_carrier, p.floor, std::max(p.floor, p.cap));

  std::vector<Document> fixed;
  if (p.enumerate) fixed = p.enumerate(max);
  const std::size_t n = p.enumerate ? fixed.size() : std::min(cfg.trials, p.max_trials);

  struct Outcome {
    Verdict v = Verdict::pass;
    std::string why;
    std::string text;
    bool generated = true;
  };
  std::vector<Outcome> out(n);
  parallel_for(n, [&](std::size_t i) {
    Outcome& o = out[i];
    std::optional<Document> d;
    if (p.enumerate) {
      d = fixed[i];
    } else {
      Gen g(trial_seed(cfg.seed, p.id, i), max);
      for (int attempt = 0; attempt < 200 && !d; ++attempt) d = p.generate(g);
    }
    if (!d) {
      o.generated = false;
      o.v = Verdict::fail;
      return;
    }
    o.v = evaluate(p, *d, &o.why);
    if (o.v != Verdict::pass) o.text = d->print();
  });
  r.trials = n;

  auto first = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(out[i])) return i;
    return std::nullopt;
  };

  if (auto g = first([](const Outcome& o) { return !o.generated; })) {
    r.status = Status::fail;
    r.detail = "could not generate an input for trial " + std::to_string(*g);
  } else if (auto bad = first([](const Outcome& o) { return o.v == Verdict::invalid; })) {
    r.status = Status::fail;
    r.detail = "generated input violates the precondition: " + out[*bad].why;
    r.counterexample = out[*bad].text;
  } else if (!p.negative) {
    if (auto f = first([](const Outcome& o) { return o.v == Verdict::fail; })) {
      r.status = Status::fail;
      r.detail = p.fail_detail;
      if (!out[*f].why.empty()) r.detail += ": " + out[*f].why;
      r.counterexample = shrink(p, out[*f].text);
    }
  } else {
    if (auto ok = first([](const Outcome& o) { return o.v == Verdict::pass; })) {
      r.status = Status::fail;
      r.detail = "corrupted input was not detected";
      r.counterexample.clear();
    } else if (n == 0) {
      r.status = Status::fail;
      r.detail = "no corrupted input";
    } else {
      // The corruption was caught; report it the way a failure is reported.
      r.counterexample = shrink(p, out[0].text);
      r.detail = p.fail_detail;
      if (!out[0].why.empty()) r.detail += ": " + out[0].why;
      if (evaluate_text(p, r.counterexample) != Verdict::fail) {
        r.status = Status::fail;
        r.detail = "counterexample does not re-parse to a failing input";
      }
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline CheckReport run_properties(const std::string& suite, const std::vector<Property>& props, const GenConfig& cfg) {
  CheckReport rep;
  rep.suite = suite;
  for (const auto& p : props) rep.checks.push_back(run_property(p, cfg));
  return rep;
}

// Property id named by a `#!check <id>` directive, if any.
inline std::optional<std::string> directive_value(const Document& d, std::string_view key) {
  for (const auto& dir : d.directives) {
    auto toks = split_ws(dir);
    if (toks.size() == 2 && toks[0] == key) return toks[1];
  }
  return std::nullopt;
}

}  // namespace cartbicat
