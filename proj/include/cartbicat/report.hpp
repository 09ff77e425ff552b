#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cartbicat {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::size_t trials = 0;
  // Failing input in the text interchange format; empty on pass.
  std::string counterexample;
  std::string detail;
  double wall_ms = 0.0;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  void record(std::string id, bool ok, std::size_t trials = 1, std::string detail = {},
              std::string counterexample = {}) {
    CheckResult r;
    r.id = std::move(id);
    r.status = ok ? Status::pass : Status::fail;
    r.trials = trials;
    r.detail = std::move(detail);
    r.counterexample = std::move(counterexample);
    checks.push_back(std::move(r));
  }

  void skip(std::string id, std::string detail) {
    CheckResult r;
    r.id = std::move(id);
    r.status = Status::skipped;
    r.detail = std::move(detail);
    checks.push_back(std::move(r));
  }

  void append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace cartbicat
