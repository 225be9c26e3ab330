#include "tough/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles/oracles.hpp"
#include "tough/connectivity.hpp"
#include "tough/error.hpp"
#include "tough/generators.hpp"
#include "tough/graph6.hpp"
#include "tough/report.hpp"

namespace tough {
namespace {

bool write_report(const std::string& path, const Json& j, std::ostream& err) {
  if (path.empty()) return true;
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot write report to " << path << "\n";
    return false;
  }
  file << dump(j);
  return static_cast<bool>(file);
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct Suite {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() == 10) failures.push_back("...");
  }
};

std::string brute_str(const oracle::BruteToughness& b) { return b.infinite ? "inf" : b.value.str(); }

void compare_with_oracle(Suite& suite, const Graph& g, const SolverOptions& solver) {
  const std::string label = write_graph6(g);
  ToughnessValue fast = toughness(g, solver);
  oracle::BruteToughness slow = oracle::toughness(g);
  suite.expect(fast.str() == brute_str(slow), label + ": tau " + fast.str() + " vs oracle " + brute_str(slow));
  if (!slow.infinite) {
    suite.expect(fast.witness.vertices() == slow.witness, label + ": witness " + fast.witness.str());
  }
  suite.expect(vertex_connectivity(g).kappa == oracle::connectivity(g), label + ": kappa differs from oracle");
  suite.expect(is_claw_free(g) == oracle::claw_free(g), label + ": claw detection differs from oracle");
}

}  // namespace

std::vector<std::string> connected_corpus(int max_n) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) out.push_back(write_graph6(g));
  }
  return out;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines = args.graphs;
  if (!args.input.empty()) {
    if (args.input == "-") {
      auto more = read_lines(std::cin);
      lines.insert(lines.end(), more.begin(), more.end());
    } else {
      std::ifstream file(args.input);
      if (!file) {
        err << "error: cannot open " << args.input << "\n";
        return kExitOperational;
      }
      auto more = read_lines(file);
      lines.insert(lines.end(), more.begin(), more.end());
    }
  }
  if (lines.empty()) {
    err << "error: no graph given\n";
    return kExitOperational;
  }
  ScanOptions options = args.options;
  options.details = true;
  options.verbose = true;
  Json records = Json::array();
  bool counterexample = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      Graph g = parse_graph6(lines[i]);
      if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "graph with no vertices");
      ScanRecord r = analyze_graph(g, write_graph6(g), i + 1, options);
      counterexample = counterexample || r.violation();
      if (!args.json) print_record(out, r);
      records.push_back(to_json(r));
    } catch (const Error& e) {
      err << "error: line " << (i + 1) << ": " << e.what() << "\n";
      return kExitOperational;
    }
  }
  Json doc;
  doc["schema"] = kReportSchema;
  doc["t"] = options.t.str();
  doc["records"] = records;
  if (args.json) out << dump(doc);
  if (!write_report(args.report_path, doc, err)) return kExitOperational;
  return counterexample ? kExitCounterexample : kExitOk;
}

int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
  ScanReport report;
  try {
    if (args.enumerate > 0) {
      report = scan_lines(connected_corpus(args.enumerate), "enumerate:connected<=" + std::to_string(args.enumerate),
                          args.options);
    } else if (args.input == "-") {
      report = scan_stream(std::cin, "<stdin>", args.options);
    } else {
      std::ifstream file(args.input);
      if (!file) {
        err << "error: cannot open " << args.input << "\n";
        return kExitOperational;
      }
      report = scan_stream(file, args.input, args.options);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitOperational;
  }
  Json doc = to_json(report);
  if (args.json) {
    out << dump(doc);
  } else {
    print_summary(out, report);
  }
  if (!write_report(args.report_path, doc, err)) return kExitOperational;
  return report.violations > 0 ? kExitCounterexample : kExitOk;
}

int cmd_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err) {
  SolverOptions solver;
  solver.inject_pruning_fault = args.inject_fault;
  std::vector<Suite> suites;

  Suite fixtures{"fixtures", 0, {}};
  struct Fixture {
    const char* name;
    Graph g;
    const char* tau;
    int kappa;
  };
  const Fixture builtin[] = {
      {"K5", make_complete(5), "inf", 4},    {"C4", make_cycle(4), "1/1", 2},     {"C5", make_cycle(5), "1/1", 2},
      {"K13", make_star(3), "1/3", 1},       {"P3", make_path(3), "1/2", 1},      {"net", make_net(), "1/2", 1},
      {"Petersen", make_petersen(), "4/3", 3}, {"K4-e", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), "1/1", 2},
  };
  for (const auto& f : builtin) {
    fixtures.expect(toughness(f.g, solver).str() == f.tau, std::string(f.name) + ": solver tau");
    fixtures.expect(brute_str(oracle::toughness(f.g)) == f.tau, std::string(f.name) + ": oracle tau");
    fixtures.expect(vertex_connectivity(f.g).kappa == f.kappa, std::string(f.name) + ": kappa");
  }
  if (!args.fixtures.empty()) {
    if (!std::filesystem::exists(args.fixtures)) {
      err << "error: fixture file not found: " << args.fixtures << "\n";
      return kExitOperational;
    }
    std::ifstream file(args.fixtures);
    std::string line;
    int number = 0;
    while (std::getline(file, line)) {
      ++number;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string g6, tau;
      int kappa = -1;
      fields >> g6 >> tau >> kappa;
      try {
        Graph g = parse_graph6(g6);
        fixtures.expect(toughness(g, solver).str() == tau, args.fixtures + ":" + std::to_string(number) + " tau");
        fixtures.expect(brute_str(oracle::toughness(g)) == tau, args.fixtures + ":" + std::to_string(number) + " oracle");
        if (kappa >= 0) {
          fixtures.expect(vertex_connectivity(g).kappa == kappa, args.fixtures + ":" + std::to_string(number) + " kappa");
        }
      } catch (const Error& e) {
        err << "error: " << args.fixtures << ":" << number << ": " << e.what() << "\n";
        return kExitOperational;
      }
    }
  }
  suites.push_back(std::move(fixtures));

  Suite corpus{"oracle equivalence, connected n<=6", 0, {}};
  for (const std::string& g6 : connected_corpus(6)) compare_with_oracle(corpus, parse_graph6(g6), solver);
  suites.push_back(std::move(corpus));

  Suite random{"oracle equivalence, random n<=10", 0, {}};
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(2, 10);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int i = 0; i < args.random_graphs; ++i) {
    int n = order(rng);
    compare_with_oracle(random, random_graph(n, density(rng), rng), solver);
  }
  suites.push_back(std::move(random));

  bool ok = true;
  for (const Suite& s : suites) {
    out << (s.failures.empty() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " checks)\n";
    for (const auto& f : s.failures) out << "  " << f << "\n";
    ok = ok && s.failures.empty();
  }
  return ok ? kExitOk : kExitOperational;
}

int cmd_enumerate(int n, bool trees, bool up_to, std::ostream& out, std::ostream& err) {
  try {
    for (int k = up_to ? 1 : n; k <= n; ++k) {
      for (const Graph& g : trees ? enumerate_trees(k) : enumerate_connected(k)) out << write_graph6(g) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitOperational;
  }
  return kExitOk;
}

}  // namespace tough
