#include "tough/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <thread>

#include "tough/connectivity.hpp"
#include "tough/error.hpp"
#include "tough/graph6.hpp"

namespace tough {
namespace {

constexpr std::size_t kChunkLines = 1 << 14;

struct Named {
  std::string_view text;
  int value;
};

constexpr Named kFilters[] = {{"claw-free", 0}, {"minimal", 1}, {"noncomplete", 2}};
constexpr Named kChecks[] = {{"ms", 0}, {"lemma23", 1}, {"lemma24", 2}, {"bound", 3}, {"mader", 4}, {"thm15", 5}};

bool selected(const ScanOptions& o, Check c) {
  return o.checks.empty() || std::find(o.checks.begin(), o.checks.end(), c) != o.checks.end();
}

bool wants(const ScanOptions& o, Filter f) { return std::find(o.filters.begin(), o.filters.end(), f) != o.filters.end(); }

/// One parsed input line waiting for a worker.
struct Item {
  std::size_t line = 0;
  std::string text;
  std::optional<ScanRecord> record;
  std::optional<std::string> error;
};

bool skippable(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s.empty() || s == ">>graph6<<";
}

std::string trimmed(std::string_view s) {
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

void process(Item& item, const ScanOptions& options) {
  try {
    Graph g = parse_graph6(item.text);
    if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "graph with no vertices");
    require_rows(g, "scan");
    item.record = analyze_graph(g, trimmed(item.text), item.line, options);
  } catch (const Error& e) {
    item.error = e.what();
  }
}

void run_pool(std::vector<Item>& items, const ScanOptions& options) {
  const int workers = std::max(1, options.workers);
  if (workers == 1 || items.size() < 2) {
    for (Item& item : items) process(item, options);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < items.size(); i = next++) process(items[i], options);
    });
  }
  for (auto& th : pool) th.join();
}

void merge(std::vector<Item>& items, ScanReport& report) {
  const ScanOptions& options = report.options;
  for (Item& item : items) {
    ++report.lines;
    if (item.error) {
      if (options.strict) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(item.line) + ": " + *item.error);
      }
      report.malformed.push_back({item.line, *item.error});
      continue;
    }
    ScanRecord& r = *item.record;
    ++report.scanned;
    if (!r.passed_filters) {
      ++report.filtered_out;
      if (options.verbose) report.records.push_back(std::move(r));
      continue;
    }
    ++report.qualifying;
    if (r.bound_qualifying) ++report.bound_qualifying;
    for (const auto& [check, tally] : r.clause_summary) report.check_totals[check] += tally;
    if (r.violation()) {
      ++report.violations;
      report.counterexamples.insert(report.counterexamples.end(), r.counterexamples.begin(), r.counterexamples.end());
    }
    if (options.verbose || r.violation()) report.records.push_back(std::move(r));
  }
}

void scan_chunk(std::vector<Item>& items, ScanReport& report) {
  run_pool(items, report.options);
  merge(items, report);
  items.clear();
}

}  // namespace

std::string_view name(Filter f) { return kFilters[static_cast<int>(f)].text; }
std::string_view name(Check c) { return kChecks[static_cast<int>(c)].text; }

std::optional<Filter> parse_filter(std::string_view text) {
  for (const auto& f : kFilters) {
    if (f.text == text) return static_cast<Filter>(f.value);
  }
  return std::nullopt;
}

std::optional<Check> parse_check(std::string_view text) {
  for (const auto& c : kChecks) {
    if (c.text == text) return static_cast<Check>(c.value);
  }
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& c : kChecks) out.push_back(static_cast<Check>(c.value));
  return out;
}

void CheckTally::add(const ClauseVerdict& v) {
  ++evaluated;
  if (!v.applicable) return;
  ++applicable;
  if (!v.evaluable) {
    ++not_evaluable;
  } else if (v.holds) {
    ++held;
  } else {
    ++failed;
  }
}

CheckTally& CheckTally::operator+=(const CheckTally& o) {
  evaluated += o.evaluated;
  applicable += o.applicable;
  held += o.held;
  failed += o.failed;
  not_evaluable += o.not_evaluable;
  return *this;
}

ScanRecord analyze_graph(const Graph& g, std::string graph6, std::size_t line, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanRecord r;
  r.line = line;
  r.graph6 = std::move(graph6);
  r.n = g.order();
  r.m = g.size();
  r.claw_free = is_claw_free(g);
  const Rational& t = options.t;

  bool passes = !(wants(options, Filter::kClawFree) && !r.claw_free) &&
                !(wants(options, Filter::kNoncomplete) && g.is_complete());
  if (!passes) return r;

  r.tau = toughness(g);
  r.tau_known = true;
  std::optional<MinimalityResult> minimal;
  if (!r.tau.is_infinite() && r.tau.value == t) {
    minimal = is_minimally_t_tough(g, t, true);
    r.minimally_t_tough = minimal->holds;
  }
  if (wants(options, Filter::kMinimal) && !r.minimally_t_tough) return r;
  r.passed_filters = true;

  r.kappa = vertex_connectivity(g).kappa;
  r.delta = degree_profile(g).min_degree;
  r.bound = known_degree_bound(t);
  r.bound_ok = !r.bound || r.delta <= *r.bound;
  r.bound_qualifying = r.minimally_t_tough && r.claw_free;

  auto record = [&](std::string_view check, const ClauseVerdict& v, std::optional<Edge> edge,
                    const EdgeCertificate* cert) {
    r.clause_summary[std::string(check)].add(v);
    if (options.details && !edge) r.graph_verdicts.push_back(v);
    if (v.failed()) {
      Counterexample cx{line, r.graph6, t, std::string(check), edge, v, std::nullopt};
      if (cert != nullptr) cx.certificate = *cert;
      r.counterexamples.push_back(std::move(cx));
    }
  };

  if (selected(options, Check::kMatthewsSumner)) record(name(Check::kMatthewsSumner), check_matthews_sumner(g), {}, nullptr);
  if (selected(options, Check::kMader)) record(name(Check::kMader), check_mader_atom_property(g), {}, nullptr);
  if (selected(options, Check::kHalfTough)) record(name(Check::kHalfTough), check_half_tough_characterization(g), {}, nullptr);

  if (selected(options, Check::kDegreeBound)) {
    ClauseVerdict v = ClauseVerdict::vacuous("bound", "graph is not minimally t-tough and claw-free");
    if (r.bound_qualifying) {
      DegreeBoundReport report = check_degree_bound(g, t);
      v.applicable = true;
      if (!report.bound) {
        v.evaluable = false;
        v.note = "no degree bound known for t = " + t.str();
      } else if (!report.satisfied) {
        v.holds = false;
        v.note = "delta = " + std::to_string(report.delta) + " exceeds bound " + std::to_string(*report.bound);
      } else {
        v.note = "delta = " + std::to_string(report.delta) + " <= " + std::to_string(*report.bound);
      }
    }
    record(name(Check::kDegreeBound), v, {}, nullptr);
  }

  const bool edge_checks = selected(options, Check::kEndpointCuts) || selected(options, Check::kNeighbourhood);
  if (r.minimally_t_tough && edge_checks) {
    CutMembership cuts(g);
    ClauseOptions clause_options{options.exhaustive};
    for (const EdgeCertificate& chosen : minimal->certificates) {
      std::vector<EdgeCertificate> certs{chosen};
      if (options.exhaustive) certs = all_minimum_certificates(g, chosen.edge, t);
      for (const EdgeCertificate& cert : certs) {
        ClauseVerdict cv;
        cv.clause = "certificate";
        cv.applicable = true;
        std::string problem = verify_certificate(g, cert, t);
        if (!problem.empty()) {
          cv.holds = false;
          cv.note = problem;
          cv.evidence = {{"S", cert.s}};
        }
        record("certificate", cv, cert.edge, &cert);

        EdgeDetail detail{cert, {}};
        if (selected(options, Check::kEndpointCuts)) {
          ClauseVerdict v = check_endpoint_cuts(g, t, cert, cuts);
          record(name(Check::kEndpointCuts), v, cert.edge, &cert);
          detail.verdicts.push_back(std::move(v));
        }
        if (selected(options, Check::kNeighbourhood) && r.claw_free) {
          for (ClauseVerdict& v : check_neighbourhood_clauses(g, t, cert, cuts, clause_options)) {
            record(name(Check::kNeighbourhood), v, cert.edge, &cert);
            detail.verdicts.push_back(std::move(v));
          }
        }
        if (options.details) r.edges.push_back(std::move(detail));
      }
    }
  }

  if (options.timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::string ScanReport::bound_status() const {
  if (!options.checks.empty() &&
      std::find(options.checks.begin(), options.checks.end(), Check::kDegreeBound) == options.checks.end()) {
    return "not checked";
  }
  if (bound_qualifying == 0) return "no qualifying graphs";
  auto it = check_totals.find("bound");
  if (it != check_totals.end() && it->second.failed > 0) return "violated";
  if (it != check_totals.end() && it->second.held == 0) return "no bound known for this t";
  return "verified on " + std::to_string(bound_qualifying) + " graphs";
}

ScanReport scan_lines(const std::vector<std::string>& lines, std::string input, const ScanOptions& options) {
  ScanReport report;
  report.input = std::move(input);
  report.options = options;
  std::vector<Item> items;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    items.push_back({i + 1, lines[i], std::nullopt, std::nullopt});
    if (items.size() == kChunkLines) scan_chunk(items, report);
  }
  scan_chunk(items, report);
  return report;
}

ScanReport scan_stream(std::istream& in, std::string input, const ScanOptions& options) {
  ScanReport report;
  report.input = std::move(input);
  report.options = options;
  std::vector<Item> items;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (skippable(text)) continue;
    items.push_back({line, text, std::nullopt, std::nullopt});
    if (items.size() == kChunkLines) scan_chunk(items, report);
  }
  scan_chunk(items, report);
  return report;
}

}  // namespace tough
