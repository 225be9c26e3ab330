#include "tough/report.hpp"

#include <ostream>

#include "tough/error.hpp"
#include "tough/graph6.hpp"

namespace tough {
namespace {

Json tally_json(const CheckTally& t) {
  Json j;
  j["evaluated"] = t.evaluated;
  j["applicable"] = t.applicable;
  j["held"] = t.held;
  j["failed"] = t.failed;
  j["not_evaluable"] = t.not_evaluable;
  j["vacuous"] = t.evaluated - t.applicable;
  return j;
}

Json tallies_json(const std::map<std::string, CheckTally>& tallies) {
  Json j = Json::object();
  for (const auto& [check, tally] : tallies) j[check] = tally_json(tally);
  return j;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

VertexSet set_from_json(const Json& j) {
  std::vector<int> members = j.get<std::vector<int>>();
  VertexSet s(members);
  if (s.size() != members.size()) throw Error(ErrorCode::kParse, "vertex set is not strictly increasing");
  return s;
}

EdgeCertificate certificate_from_json(const Json& j) {
  EdgeCertificate c;
  auto edge = j.at("edge").get<std::vector<int>>();
  if (edge.size() != 2) throw Error(ErrorCode::kParse, "edge must have two endpoints");
  c.edge = Edge(edge[0], edge[1]);
  c.s = set_from_json(j.at("S"));
  c.k = j.at("k").get<int>();
  c.c_of_e = set_from_json(j.at("C"));
  c.d_of_e = set_from_json(j.at("D"));
  c.c_u = set_from_json(j.at("C_u"));
  c.c_v = set_from_json(j.at("C_v"));
  c.bridge_case = j.at("bridge_case").get<bool>();
  return c;
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.vertices()); }

Json to_json(const ClauseVerdict& v) {
  Json j;
  j["clause"] = v.clause;
  j["applicable"] = v.applicable;
  j["holds"] = v.holds;
  j["evaluable"] = v.evaluable;
  j["note"] = v.note;
  Json evidence = Json::object();
  for (const NamedSet& s : v.evidence) evidence[s.name] = to_json(s.set);
  j["evidence"] = evidence;
  return j;
}

Json to_json(const EdgeCertificate& c) {
  Json j;
  j["edge"] = {c.edge.u, c.edge.v};
  j["bridge_case"] = c.bridge_case;
  j["k"] = c.k;
  j["S"] = to_json(c.s);
  j["C"] = to_json(c.c_of_e);
  j["D"] = to_json(c.d_of_e);
  j["C_u"] = to_json(c.c_u);
  j["C_v"] = to_json(c.c_v);
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["line"] = c.line;
  j["graph6"] = c.graph6;
  j["t"] = c.t.str();
  j["check"] = c.check;
  j["edge"] = c.edge ? Json{c.edge->u, c.edge->v} : Json(nullptr);
  j["verdict"] = to_json(c.verdict);
  j["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  return j;
}

Json to_json(const ScanRecord& r) {
  Json j;
  j["line"] = r.line;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["passed_filters"] = r.passed_filters;
  if (!r.passed_filters) {
    j["claw_free"] = r.claw_free;
    if (r.tau_known) {
      j["tau"] = r.tau.str();
      j["minimally_t_tough"] = r.minimally_t_tough;
    }
    return j;
  }
  j["kappa"] = r.kappa;
  j["tau"] = r.tau.str();
  j["tau_witness"] = to_json(r.tau.witness);
  j["claw_free"] = r.claw_free;
  j["minimally_t_tough"] = r.minimally_t_tough;
  j["delta"] = r.delta;
  j["bound"] = optional_int(r.bound);
  j["bound_ok"] = r.bound_ok;
  j["clause_verdicts"] = tallies_json(r.clause_summary);
  if (!r.graph_verdicts.empty()) {
    Json verdicts = Json::array();
    for (const auto& v : r.graph_verdicts) verdicts.push_back(to_json(v));
    j["graph_verdicts"] = verdicts;
  }
  if (!r.edges.empty()) {
    Json edges = Json::array();
    for (const EdgeDetail& d : r.edges) {
      Json e;
      e["certificate"] = to_json(d.certificate);
      Json verdicts = Json::array();
      for (const auto& v : d.verdicts) verdicts.push_back(to_json(v));
      e["verdicts"] = verdicts;
      edges.push_back(e);
    }
    j["edges"] = edges;
  }
  if (!r.counterexamples.empty()) {
    Json cx = Json::array();
    for (const auto& c : r.counterexamples) cx.push_back(to_json(c));
    j["counterexamples"] = cx;
  }
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

Json to_json(const ScanReport& report) {
  const ScanOptions& o = report.options;
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = "toughcli";
  j["version"] = std::string(kToolVersion);
  j["t"] = o.t.str();
  j["input"] = report.input;
  Json filters = Json::array();
  for (Filter f : o.filters) filters.push_back(std::string(name(f)));
  j["filters"] = filters;
  Json checks = Json::array();
  for (Check c : (o.checks.empty() ? all_checks() : o.checks)) checks.push_back(std::string(name(c)));
  j["checks"] = checks;
  j["exhaustive"] = o.exhaustive;
  Json totals;
  totals["lines"] = report.lines;
  totals["malformed"] = report.malformed.size();
  totals["scanned"] = report.scanned;
  totals["filtered"] = report.filtered_out;
  totals["qualifying"] = report.qualifying;
  totals["minimal_claw_free"] = report.bound_qualifying;
  totals["violations"] = report.violations;
  j["totals"] = totals;
  j["check_totals"] = tallies_json(report.check_totals);
  j["bound_status"] = report.bound_status();
  Json malformed = Json::array();
  for (const auto& m : report.malformed) malformed.push_back({{"line", m.line}, {"message", m.message}});
  j["malformed"] = malformed;
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  j["records"] = records;
  Json cx = Json::array();
  for (const auto& c : report.counterexamples) cx.push_back(to_json(c));
  j["counterexamples"] = cx;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void print_summary(std::ostream& os, const ScanReport& report) {
  os << "input " << report.input << ", t = " << report.options.t << "\n";
  os << "lines " << report.lines << ", malformed " << report.malformed.size() << ", scanned " << report.scanned
     << ", filtered " << report.filtered_out << ", qualifying " << report.qualifying << ", violations "
     << report.violations << "\n";
  constexpr std::size_t kShownMalformed = 10;
  for (std::size_t i = 0; i < report.malformed.size() && i < kShownMalformed; ++i) {
    os << "  malformed line " << report.malformed[i].line << ": " << report.malformed[i].message << "\n";
  }
  if (report.malformed.size() > kShownMalformed) {
    os << "  ... " << (report.malformed.size() - kShownMalformed) << " more malformed lines in the report\n";
  }
  for (const auto& [check, t] : report.check_totals) {
    os << "  " << check << ": evaluated " << t.evaluated << ", applicable " << t.applicable << ", held " << t.held
       << ", failed " << t.failed << ", not evaluable " << t.not_evaluable << ", vacuous "
       << (t.evaluated - t.applicable) << "\n";
  }
  os << "degree bound: " << report.bound_status() << "\n";
  for (const auto& c : report.counterexamples) {
    os << "COUNTEREXAMPLE line " << c.line << " " << c.graph6 << " [" << c.check << "/" << c.verdict.clause << "]";
    if (c.edge) os << " edge " << to_string(*c.edge);
    os << ": " << c.verdict.note << "\n";
  }
}

void print_record(std::ostream& os, const ScanRecord& r) {
  os << r.graph6 << ": n=" << r.n << " m=" << r.m;
  if (!r.passed_filters) {
    os << " (filtered out)\n";
    return;
  }
  os << " kappa=" << r.kappa << " tau=" << r.tau.str() << " witness=" << r.tau.witness.str()
     << " claw_free=" << (r.claw_free ? "yes" : "no") << " minimally_t_tough=" << (r.minimally_t_tough ? "yes" : "no")
     << " delta=" << r.delta << " bound=" << (r.bound ? std::to_string(*r.bound) : "none") << "\n";
  for (const auto& [check, t] : r.clause_summary) {
    os << "  " << check << ": applicable " << t.applicable << ", held " << t.held << ", failed " << t.failed
       << ", vacuous " << (t.evaluated - t.applicable) << "\n";
  }
  for (const auto& d : r.edges) {
    const auto& c = d.certificate;
    os << "  edge " << to_string(c.edge) << ": S=" << c.s.str() << (c.bridge_case ? " (bridge)" : "")
       << " C=" << c.c_of_e.str() << " D=" << c.d_of_e.str() << " C_u=" << c.c_u.str() << " C_v=" << c.c_v.str()
       << "\n";
  }
}

std::string revalidate_counterexample(const Json& cx) {
  try {
    Graph g = parse_graph6(cx.at("graph6").get<std::string>());
    Rational t = Rational::parse(cx.at("t").get<std::string>());
    const std::string check = cx.at("check").get<std::string>();
    const Json& verdict = cx.at("verdict");
    for (const auto& [label, members] : verdict.at("evidence").items()) {
      require_subset(g, set_from_json(members));
    }
    if (!cx.at("certificate").is_null()) {
      EdgeCertificate cert = certificate_from_json(cx.at("certificate"));
      std::string problem = verify_certificate(g, cert, t);
      if (!problem.empty() && check != "certificate") return "serialized certificate invalid: " + problem;
    }

    ScanOptions options;
    options.t = t;
    options.exhaustive = true;
    options.verbose = true;
    if (check != "certificate") {
      auto parsed = parse_check(check);
      if (!parsed) return "unknown check '" + check + "'";
      options.checks = {*parsed};
    }
    ScanRecord r = analyze_graph(g, cx.at("graph6").get<std::string>(), cx.at("line").get<std::size_t>(), options);
    for (const Counterexample& found : r.counterexamples) {
      Json again = to_json(found);
      if (again.at("check") == cx.at("check") && again.at("edge") == cx.at("edge") &&
          again.at("verdict") == verdict) {
        return {};
      }
    }
    return "failure does not reproduce";
  } catch (const std::exception& e) {
    return std::string("cannot revalidate: ") + e.what();
  }
}

}  // namespace tough
