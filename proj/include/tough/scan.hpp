#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"
#include "tough/structure.hpp"
#include "tough/toughness.hpp"
#include "tough/verdict.hpp"

namespace tough {

inline constexpr int kReportSchema = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Filter { kClawFree, kMinimal, kNoncomplete };
enum class Check { kMatthewsSumner, kEndpointCuts, kNeighbourhood, kDegreeBound, kMader, kHalfTough };

std::string_view name(Filter f);
std::string_view name(Check c);
std::optional<Filter> parse_filter(std::string_view text);
std::optional<Check> parse_check(std::string_view text);
std::vector<Check> all_checks();

struct ScanOptions {
  Rational t{1};
  std::vector<Filter> filters;
  /// Empty selects every check.
  std::vector<Check> checks;
  int workers = 1;
  /// Include passing records in the report, not only violations.
  bool verbose = false;
  /// Malformed input lines abort the scan.
  bool strict = false;
  /// Evaluate clauses over every minimum certificate and enable the costly
  /// second conclusion of neighbourhood clause 4.
  bool exhaustive = false;
  /// Record elapsed_ms per graph. Off by default so reports are reproducible.
  bool timing = false;
  /// Keep per-edge certificates and every verdict (used by analyze).
  bool details = false;
};

/// applicable + vacuous = evaluated; held counts applicable verdicts that held.
struct CheckTally {
  long long evaluated = 0;
  long long applicable = 0;
  long long held = 0;
  long long failed = 0;
  long long not_evaluable = 0;

  void add(const ClauseVerdict& v);
  CheckTally& operator+=(const CheckTally& o);
};

struct Counterexample {
  std::size_t line = 0;
  std::string graph6;
  Rational t;
  std::string check;
  std::optional<Edge> edge;
  ClauseVerdict verdict;
  std::optional<EdgeCertificate> certificate;
};

struct EdgeDetail {
  EdgeCertificate certificate;
  std::vector<ClauseVerdict> verdicts;
};

struct ScanRecord {
  std::size_t line = 0;
  std::string graph6;
  bool passed_filters = false;
  /// tau (and minimality) were computed; false when a cheap filter rejected the graph first.
  bool tau_known = false;
  int n = 0;
  int m = 0;
  int kappa = 0;
  ToughnessValue tau;
  bool claw_free = false;
  bool minimally_t_tough = false;
  int delta = 0;
  std::optional<int> bound;
  bool bound_ok = true;
  /// Minimally t-tough and claw-free: the class the degree bound speaks about.
  bool bound_qualifying = false;
  std::map<std::string, CheckTally> clause_summary;
  std::vector<Counterexample> counterexamples;
  std::vector<ClauseVerdict> graph_verdicts;
  std::vector<EdgeDetail> edges;
  std::optional<long long> elapsed_ms;

  bool violation() const { return !counterexamples.empty(); }
};

/// Runs the filters and every selected check on one graph.
ScanRecord analyze_graph(const Graph& g, std::string graph6, std::size_t line, const ScanOptions& options);

struct MalformedLine {
  std::size_t line = 0;
  std::string message;
};

struct ScanReport {
  std::string input;
  ScanOptions options;
  long long lines = 0;
  long long scanned = 0;
  long long filtered_out = 0;
  long long qualifying = 0;
  long long bound_qualifying = 0;
  long long violations = 0;
  std::map<std::string, CheckTally> check_totals;
  std::vector<ScanRecord> records;
  std::vector<Counterexample> counterexamples;
  std::vector<MalformedLine> malformed;

  /// "no qualifying graphs", "verified on N graphs", "violated", or
  /// "not checked".
  std::string bound_status() const;
};

/// Scans graph6 lines with a fixed worker pool. Records come back in input
/// order, so the report does not depend on the worker count. Blank lines
/// and a ">>graph6<<" header are skipped.
ScanReport scan_lines(const std::vector<std::string>& lines, std::string input, const ScanOptions& options);
ScanReport scan_stream(std::istream& in, std::string input, const ScanOptions& options);

}  // namespace tough
