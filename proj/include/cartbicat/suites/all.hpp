#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "../rel.hpp"
#include "../span.hpp"
#include "cartesian_suite.hpp"
#include "groth_suite.hpp"
#include "homprod_suite.hpp"
#include "kernel_suite.hpp"
#include "lax_suite.hpp"
#include "mapprod_suite.hpp"
#include "monoidal_suite.hpp"

namespace cartbicat::suites {

template <Bicategory B>
std::vector<Property> properties_for(const std::string& suite) {
  if (suite == "kernel") return kernel_properties<B>();
  if (suite == "homprod") return homprod_properties<B>();
  if (suite == "mapprod") return mapprod_properties<B>();
  if (suite == "groth") return groth_properties<B>();
  if (suite == "lax") return lax_properties<B>();
  if (suite == "cartesian") return cartesian_properties<B>();
  if (suite == "monoidal") return monoidal_properties<B>();
  fail(ErrorKind::invalid_config, "unknown suite '" + suite + "'");
}

inline std::vector<Property> properties_for(const std::string& suite, const std::string& instance) {
  if (instance == "span") return properties_for<SpanBicat>(suite);
  if (instance == "rel") return properties_for<RelBicat>(suite);
  fail(ErrorKind::invalid_config, "instance must be span or rel, got '" + instance + "'");
}

inline std::vector<CheckReport> run_suites(const GenConfig& cfg) {
  validate(cfg);
  std::vector<CheckReport> out;
  // Report in canonical suite order, whatever order the filter lists them in.
  for (const auto& s : all_suite_names())
    if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end())
      out.push_back(run_properties(s, properties_for(s, cfg.instance), cfg));
  return out;
}

inline std::optional<Property> find_property(const std::string& id, const std::string& instance) {
  const auto dot = id.find('.');
  if (dot == std::string::npos) return std::nullopt;
  const auto suite = id.substr(0, dot);
  const auto& known = all_suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) return std::nullopt;
  for (auto& p : properties_for(suite, instance))
    if (p.id == id) return p;
  return std::nullopt;
}

// Fixture files under `path` (a file or a directory, *.bicat, sorted).
inline std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) return {path};
  require(fs::is_directory(path, ec), ErrorKind::io_error, "fixture path '" + path.string() + "' does not exist");
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(path))
    if (e.is_regular_file() && e.path().extension() == ".bicat") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// One check per fixture: it passes iff the property named by `#!check` holds.
// Unreadable or malformed fixtures throw; they are input errors, not failures.
inline CheckReport run_fixtures(const std::filesystem::path& path, const GenConfig& cfg) {
  CheckReport rep;
  rep.suite = "fixtures";
  for (const auto& file : fixture_files(path)) {
    std::ifstream in(file);
    require(static_cast<bool>(in), ErrorKind::io_error, "cannot open '" + file.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    Document d;
    try {
      d = Document::parse(text);
    } catch (const Error& e) {
      fail(ErrorKind::parse_error, file.string() + ": " + e.what());
    }
    auto id = directive_value(d, "check");
    require(id.has_value(), ErrorKind::parse_error, file.string() + ": missing '#!check <id>' directive");
    const auto instance = directive_value(d, "instance").value_or(cfg.instance);
    auto p = find_property(*id, instance);
    require(p.has_value(), ErrorKind::parse_error, file.string() + ": unknown check '" + *id + "'");

    CheckResult r;
    r.id = "fixture:" + file.filename().string();
    r.trials = 1;
    std::string why;
    switch (evaluate(*p, d, &why)) {
      case Verdict::pass:
        break;
      case Verdict::invalid:
        r.status = Status::fail;
        r.detail = *id + ": fixture violates the precondition: " + why;
        r.counterexample = d.print();
        break;
      case Verdict::fail:
        r.status = Status::fail;
        r.detail = *id + ": " + p->fail_detail;
        if (!why.empty()) r.detail += ": " + why;
        r.counterexample = shrink(*p, d.print());
        break;
    }
    rep.checks.push_back(std::move(r));
  }
  return rep;
}

}  // namespace cartbicat::suites
