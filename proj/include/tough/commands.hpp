#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tough/scan.hpp"

namespace tough {

enum ExitCode : int { kExitOk = 0, kExitOperational = 1, kExitCounterexample = 2 };

struct AnalyzeArgs {
  std::vector<std::string> graphs;  // graph6 strings given inline
  std::string input;                // graph6 file, "-" for stdin, empty for none
  ScanOptions options;
  bool json = false;
  std::string report_path;
};

struct ScanArgs {
  std::string input = "-";
  /// When > 0, scan every connected graph on 1..enumerate vertices instead of reading input.
  int enumerate = 0;
  ScanOptions options;
  std::string report_path;
  bool json = false;
};

struct SelftestArgs {
  std::string fixtures;  // optional "graph6 tau [kappa]" file
  bool inject_fault = false;
  int random_graphs = 200;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err);
/// Prints graph6 lines: connected graphs (or trees) on exactly n vertices,
/// or on 1..n vertices with up_to.
int cmd_enumerate(int n, bool trees, bool up_to, std::ostream& out, std::ostream& err);

/// Every connected graph on 1..max_n vertices as graph6 lines.
std::vector<std::string> connected_corpus(int max_n);

}  // namespace tough
