#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tough/scan.hpp"

namespace tough {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const ClauseVerdict& v);
Json to_json(const EdgeCertificate& c);
Json to_json(const Counterexample& c);
Json to_json(const ScanRecord& r);
/// Versioned report document ("schema": 1).
Json to_json(const ScanReport& report);

/// Indented JSON text followed by a newline. Identical inputs give
/// byte-identical output.
std::string dump(const Json& j);

/// Plain-text summary for stdout.
void print_summary(std::ostream& os, const ScanReport& report);
void print_record(std::ostream& os, const ScanRecord& record);

/// Rebuilds a counterexample from its own JSON: reparses the graph,
/// rechecks the serialized certificate and evidence sets against it, and
/// reruns the named check. Returns an empty string when the failure
/// reproduces with identical evidence, otherwise the reason it does not.
std::string revalidate_counterexample(const Json& counterexample);

}  // namespace tough
