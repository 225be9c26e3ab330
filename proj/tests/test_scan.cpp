#include <doctest.h>

#include <sstream>

#include "tough/commands.hpp"
#include "tough/graph6.hpp"
#include "tough/report.hpp"
#include "tough/scan.hpp"

using namespace tough;

TEST_CASE("flag names round trip") {
  for (Check c : all_checks()) CHECK(parse_check(name(c)) == c);
  CHECK(parse_filter("claw-free") == Filter::kClawFree);
  CHECK(parse_filter("minimal") == Filter::kMinimal);
  CHECK(parse_filter("noncomplete") == Filter::kNoncomplete);
  CHECK_FALSE(parse_check("lemma99").has_value());
}

TEST_CASE("analyze reports the fixture records") {
  ScanOptions o;
  o.t = Rational(1);
  ScanRecord c4 = analyze_graph(parse_graph6("Cl"), "Cl", 1, o);
  CHECK(c4.minimally_t_tough);
  CHECK(c4.delta == 2);
  CHECK(c4.tau.str() == "1/1");
  ScanRecord k4 = analyze_graph(parse_graph6("C~"), "C~", 1, o);
  CHECK(k4.tau.str() == "inf");
  CHECK_FALSE(k4.minimally_t_tough);
  o.t = Rational(1, 2);
  ScanRecord net = analyze_graph(parse_graph6("E{O_"), "E{O_", 1, o);
  CHECK(net.minimally_t_tough);
  CHECK(net.delta == 1);
  CHECK_FALSE(net.violation());
}

TEST_CASE("malformed lines are counted unless strict") {
  std::vector<std::string> lines = {">>graph6<<Cl", "", "C", "Dhc", "not graph6 at all!"};
  ScanOptions o;
  ScanReport r = scan_lines(lines, "test", o);
  CHECK(r.scanned == 2);
  CHECK(r.malformed.size() == 2);
  CHECK(r.malformed[0].line == 3);
  o.strict = true;
  CHECK_THROWS(scan_lines(lines, "test", o));
}

TEST_CASE("reports do not depend on the worker count") {
  auto corpus = connected_corpus(6);
  ScanOptions o;
  o.t = Rational(1);
  o.verbose = true;
  o.workers = 1;
  std::string one = dump(to_json(scan_lines(corpus, "corpus", o)));
  o.workers = 3;
  std::string three = dump(to_json(scan_lines(corpus, "corpus", o)));
  CHECK(one == three);
}

TEST_CASE("verbose totals match the records") {
  ScanOptions o;
  o.t = Rational(1, 2);
  o.verbose = true;
  o.filters = {Filter::kClawFree};
  ScanReport r = scan_lines(connected_corpus(5), "corpus", o);
  long long qualifying = 0;
  for (const auto& rec : r.records) qualifying += rec.passed_filters ? 1 : 0;
  CHECK(qualifying == r.qualifying);
  CHECK(r.scanned == static_cast<long long>(r.records.size()));
  CHECK(r.scanned == r.qualifying + r.filtered_out);
}

TEST_CASE("bound status distinguishes an empty class from a verified one") {
  ScanOptions o;
  o.t = Rational(2);
  o.filters = {Filter::kClawFree, Filter::kMinimal};
  CHECK(scan_lines(connected_corpus(5), "c", o).bound_status() == "no qualifying graphs");
  o.t = Rational(1);
  CHECK(scan_lines(connected_corpus(5), "c", o).bound_status() == "verified on 2 graphs");
  o.t = Rational(5, 4);
  CHECK(scan_lines(connected_corpus(5), "c", o).bound_status() != "violated");
}

TEST_CASE("json report carries the schema and exact rationals") {
  ScanOptions o;
  o.t = Rational(1);
  o.verbose = true;
  Json j = to_json(scan_lines({"IheA@GUAo"}, "petersen", o));
  CHECK(j["schema"] == 1);
  CHECK(j["t"] == "1/1");
  CHECK(j["records"][0]["tau"] == "4/3");
  CHECK_FALSE(j["records"][0].contains("elapsed_ms"));
}

TEST_CASE("forged counterexamples are not reproduced") {
  ScanOptions o;
  o.t = Rational(1);
  o.details = true;
  ScanRecord r = analyze_graph(parse_graph6("Dhc"), "Dhc", 1, o);
  REQUIRE_FALSE(r.edges.empty());
  Counterexample fake;
  fake.line = 1;
  fake.graph6 = "Dhc";
  fake.t = Rational(1);
  fake.check = "lemma23";
  fake.edge = r.edges[0].certificate.edge;
  fake.certificate = r.edges[0].certificate;
  fake.verdict = r.edges[0].verdicts[0];
  fake.verdict.holds = false;
  CHECK_FALSE(revalidate_counterexample(to_json(fake)).empty());
  Json broken = to_json(fake);
  broken["graph6"] = "??";
  CHECK_FALSE(revalidate_counterexample(broken).empty());
}
