// toughcli: toughness analysis, corpus scans and self-checks for small graphs.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tough/commands.hpp"
#include "tough/error.hpp"
#include "tough/report.hpp"

namespace {

using namespace tough;

// Shared by analyze and scan.
struct CommonFlags {
  std::string t = "1/1";
  std::vector<std::string> filters;
  std::vector<std::string> checks;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--t", f.t, "toughness threshold as p/q")->capture_default_str();
  app->add_option("--filter", f.filters, "claw-free | minimal | noncomplete (repeatable)");
  app->add_option("--check", f.checks, "ms | lemma23 | lemma24 | bound | mader | thm15 (repeatable)");
}

ScanOptions to_options(const CommonFlags& f) {
  ScanOptions o;
  o.t = Rational::parse(f.t);
  if (o.t <= Rational(0)) throw Error(ErrorCode::kOutOfRange, "--t must be positive, got " + f.t);
  for (const auto& s : f.filters) {
    auto v = parse_filter(s);
    if (!v) throw Error(ErrorCode::kInvalidArgument, "unknown filter: " + s);
    o.filters.push_back(*v);
  }
  for (const auto& s : f.checks) {
    auto v = parse_check(s);
    if (!v) throw Error(ErrorCode::kInvalidArgument, "unknown check: " + s);
    o.checks.push_back(*v);
  }
  return o;
}

int revalidate(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitOperational;
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitOperational;
  }
  int bad = 0, total = 0;
  for (const auto& c : doc.value("counterexamples", Json::array())) {
    ++total;
    std::string why = revalidate_counterexample(c);
    if (!why.empty()) {
      ++bad;
      std::cout << "NOT REPRODUCED " << c.value("graph6", "?") << ": " << why << "\n";
    }
  }
  std::cout << (total - bad) << "/" << total << " counterexamples reproduced\n";
  return bad == 0 ? kExitOk : kExitOperational;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness analysis and claim checks for small graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "analyze individual graphs in detail");
  add_common(a, analyze_flags);
  a->add_option("--graph,-g", analyze.graphs, "graph6 string (repeatable)");
  a->add_option("--input,-i", analyze.input, "graph6 file, - for stdin");
  a->add_flag("--json", analyze.json, "print JSON instead of text");
  a->add_option("--report", analyze.report_path, "write JSON to PATH");
  a->add_flag("--exhaustive", analyze.options.exhaustive, "evaluate clauses over every minimum certificate");

  CommonFlags scan_flags;
  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "scan a graph6 corpus");
  add_common(s, scan_flags);
  s->add_option("input", scan.input, "graph6 file, - for stdin")->capture_default_str();
  s->add_option("--enumerate", scan.enumerate, "scan all connected graphs on up to N vertices (N <= 8)")
      ->check(CLI::Range(1, 8));
  s->add_option("--workers", scan.options.workers, "worker threads")->check(CLI::Range(1, 256));
  s->add_flag("--verbose", scan.options.verbose, "include passing records in the report");
  s->add_flag("--strict", scan.options.strict, "abort on malformed lines");
  s->add_flag("--exhaustive", scan.options.exhaustive, "evaluate clauses over every minimum certificate");
  s->add_flag("--timing", scan.options.timing, "record elapsed_ms per graph (breaks reproducibility)");
  s->add_flag("--json", scan.json, "print the JSON report instead of the summary");
  s->add_option("--report", scan.report_path, "write JSON report to PATH");

  SelftestArgs selftest;
  auto* st = app.add_subcommand("selftest", "check the solver against brute-force oracles and fixtures");
  st->add_option("--fixtures", selftest.fixtures, "extra fixture file: graph6 tau [kappa] per line");
  st->add_flag("--inject-fault", selftest.inject_fault, "weaken the solver's pruning bound (must fail)");
  st->add_option("--random", selftest.random_graphs, "number of random graphs")->check(CLI::Range(0, 100000));

  int enum_n = 0;
  bool enum_trees = false, enum_up_to = false;
  auto* en = app.add_subcommand("enumerate", "list connected graphs or trees as graph6");
  en->add_option("n", enum_n, "order")->required()->check(CLI::Range(1, 16));
  en->add_flag("--trees", enum_trees, "trees instead of connected graphs");
  en->add_flag("--up-to", enum_up_to, "all orders 1..n");

  std::string report_path;
  auto* rv = app.add_subcommand("revalidate", "re-check counterexamples stored in a report");
  rv->add_option("report", report_path, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitOperational;
  }

  try {
    if (*a) {
      analyze.options = [&] {
        ScanOptions o = to_options(analyze_flags);
        o.exhaustive = analyze.options.exhaustive;
        return o;
      }();
      return cmd_analyze(analyze, std::cout, std::cerr);
    }
    if (*s) {
      ScanOptions o = to_options(scan_flags);
      o.workers = scan.options.workers;
      o.verbose = scan.options.verbose;
      o.strict = scan.options.strict;
      o.exhaustive = scan.options.exhaustive;
      o.timing = scan.options.timing;
      scan.options = o;
      return cmd_scan(scan, std::cout, std::cerr);
    }
    if (*st) return cmd_selftest(selftest, std::cout, std::cerr);
    if (*en) return cmd_enumerate(enum_n, enum_trees, enum_up_to, std::cout, std::cerr);
    if (*rv) return revalidate(report_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOperational;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOperational;
  }
  return kExitOperational;
}
