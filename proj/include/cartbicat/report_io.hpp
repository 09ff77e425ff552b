#pragma once

// Text and JSON Lines renderings of check reports. Wall times are written
// only on request, so equal configurations give byte-equal reports.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"
#include "report.hpp"

namespace cartbicat {

struct ReportTotals {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

inline ReportTotals totals(const std::vector<CheckReport>& reps) {
  ReportTotals t;
  for (const auto& rep : reps)
    for (const auto& c : rep.checks) {
      if (c.status == Status::pass) ++t.pass;
      if (c.status == Status::fail) ++t.fail;
      if (c.status == Status::skipped) ++t.skipped;
    }
  return t;
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Counterexamples sit between marker lines and are copied verbatim, so the
// block can be cut out and fed back through --fixtures.
inline void write_text(std::ostream& os, const GenConfig& cfg, const std::vector<CheckReport>& reps, bool timing) {
  os << "bicat-check instance=" << cfg.instance << " max-size=" << cfg.max_carrier << " trials=" << cfg.trials
     << " seed=" << cfg.seed << " suites=" << join(cfg.suites, ",") << "\n";
  for (const auto& rep : reps) {
    os << "\n[" << rep.suite << "]\n";
    for (const auto& c : rep.checks) {
      os << to_string(c.status) << " " << c.id << " trials=" << c.trials;
      if (timing) os << " ms=" << static_cast<long long>(c.wall_ms);
      if (!c.detail.empty()) os << " -- " << c.detail;
      os << "\n";
      if (!c.counterexample.empty()) {
        os << "--- counterexample " << c.id << "\n" << c.counterexample;
        if (c.counterexample.back() != '\n') os << "\n";
        os << "--- end\n";
      }
    }
  }
  const auto t = totals(reps);
  os << "\nsummary: " << t.pass << " pass, " << t.fail << " fail, " << t.skipped << " skipped\n";
}

inline nlohmann::json to_json(const CheckResult& c, const std::string& suite, bool timing) {
  nlohmann::json j = {{"type", "check"},   {"suite", suite},   {"id", c.id},
                      {"status", to_string(c.status)}, {"trials", c.trials}, {"detail", c.detail}};
  j["counterexample"] = c.counterexample.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.counterexample);
  if (timing) j["wall_ms"] = c.wall_ms;
  return j;
}

// One JSON object per line: a config record, one record per check, a summary.
inline void write_machine(std::ostream& os, const GenConfig& cfg, const std::vector<CheckReport>& reps, bool timing) {
  os << nlohmann::json{{"type", "config"},
                       {"instance", cfg.instance},
                       {"max_size", cfg.max_carrier},
                       {"trials", cfg.trials},
                       {"seed", cfg.seed},
                       {"suites", cfg.suites}}
            .dump()
     << "\n";
  for (const auto& rep : reps)
    for (const auto& c : rep.checks) os << to_json(c, rep.suite, timing).dump() << "\n";
  const auto t = totals(reps);
  os << nlohmann::json{{"type", "summary"}, {"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}}.dump()
     << "\n";
}

}  // namespace cartbicat
