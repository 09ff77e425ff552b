// bicat-check: run the property suites and fixture files, print a report.
//
// Exit status: 0 all checks pass, 1 some check fails, 2 bad arguments or
// configuration, 3 unreadable or malformed input (fixtures, output file).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartbicat/report_io.hpp"
#include "cartbicat/suites/all.hpp"

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

std::vector<std::string> parse_suites(const std::string& arg) {
  if (arg == "all") return cartbicat::all_suite_names();
  if (arg == "none") return {};
  std::vector<std::string> out;
  std::stringstream ss(arg);
  for (std::string s; std::getline(ss, s, ',');)
    if (!s.empty()) out.push_back(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cartbicat;
  CLI::App app{"Check the cartesian bicategory laws on Span and Rel"};
  GenConfig cfg;
  std::string suites = "all";
  std::string report = "text";
  std::string fixtures;
  std::string output;
  bool timing = false;
  app.add_option("--instance", cfg.instance, "span or rel")->check(CLI::IsMember({"span", "rel"}));
  app.add_option("--max-size", cfg.max_carrier, "largest carrier size");
  app.add_option("--trials", cfg.trials, "trials per sampled check")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "generator seed");
  auto* suite_opt = app.add_option("--suite", suites, "comma-separated suites, 'all' or 'none'");
  app.add_option("--report", report, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--fixtures", fixtures, "fixture file or directory (*.bicat)");
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--timing", timing, "include wall times (reports are then not reproducible)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  // With fixtures and no explicit --suite, only the fixtures run.
  cfg.suites = (!fixtures.empty() && suite_opt->count() == 0) ? std::vector<std::string>{} : parse_suites(suites);

  std::vector<CheckReport> reps;
  try {
    if (!cfg.suites.empty()) reps = suites::run_suites(cfg);
    else require(!fixtures.empty(), ErrorKind::invalid_config, "no suites selected");
    if (!fixtures.empty()) reps.push_back(suites::run_fixtures(fixtures, cfg));
  } catch (const Error& e) {
    std::cerr << "bicat-check: " << e.what() << "\n";
    return e.kind() == ErrorKind::io_error || e.kind() == ErrorKind::parse_error ? exit_io : exit_usage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "bicat-check: io-error: cannot write '" << output << "'\n";
      return exit_io;
    }
  }
  std::ostream& os = output.empty() ? std::cout : file;
  if (report == "machine") write_machine(os, cfg, reps, timing);
  else write_text(os, cfg, reps, timing);
  os.flush();
  if (!os) {
    std::cerr << "bicat-check: io-error: writing the report failed\n";
    return exit_io;
  }
  return totals(reps).fail == 0 ? 0 : exit_fail;
}
