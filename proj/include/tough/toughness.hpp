#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// tau(G) as an exact rational with an optimal cut set, or +infinity for
/// complete graphs. Disconnected graphs have tau = 0 with the empty witness.
struct ToughnessValue {
  enum class Kind { kFinite, kInfinite };

  Kind kind = Kind::kInfinite;
  Rational value;
  VertexSet witness;

  static ToughnessValue infinite() { return {}; }
  static ToughnessValue finite(Rational value, VertexSet witness) {
    return {Kind::kFinite, value, std::move(witness)};
  }

  bool is_infinite() const { return kind == Kind::kInfinite; }
  bool at_least(const Rational& t) const { return is_infinite() || value >= t; }

  /// "p/q" or "inf".
  std::string str() const { return is_infinite() ? "inf" : value.str(); }

  friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;
};

struct SolverOptions {
  /// Fault injection for the self-test: bound partial sets as if no further
  /// removal could add a component. Produces wrong answers on purpose.
  bool inject_pruning_fault = false;
};

struct SolverStats {
  long long nodes = 0;
  long long leaves = 0;
};

/// Exact toughness by branch and bound over cut sizes kappa..n-2.
///
/// Among all optimal sets the witness is the lexicographically least sorted
/// vertex list. Requires n <= 64.
ToughnessValue toughness(const Graph& g, const SolverOptions& options = {}, SolverStats* stats = nullptr);

bool is_t_tough(const Graph& g, const Rational& t);

/// Certificate S(e) for an edge of a minimally t-tough graph.
///
/// Either e is a bridge (bridge_case, s empty), or s is a minimum set with
/// w(G-s) <= |s|/t < w((G-e)-s) in which e is a bridge of G-s; ties broken
/// lexicographically. c_of_e is the component of G-s holding e, d_of_e the
/// union of the others, and c_u / c_v split c_of_e once e is deleted.
struct EdgeCertificate {
  Edge edge;
  VertexSet s;
  int k = 0;
  VertexSet c_of_e;
  VertexSet d_of_e;
  VertexSet c_u;
  VertexSet c_v;
  bool bridge_case = false;

  friend bool operator==(const EdgeCertificate&, const EdgeCertificate&) = default;
};

/// Throws NO_CERTIFICATE when tau(g - e) >= t or no qualifying set exists.
EdgeCertificate edge_certificate(const Graph& g, const Edge& e, const Rational& t);

/// Every minimum-cardinality certificate for e, in lexicographic order of s.
std::vector<EdgeCertificate> all_minimum_certificates(const Graph& g, const Edge& e, const Rational& t);

/// Rechecks a certificate from scratch against g; returns an empty string
/// when it is valid, otherwise the first violated condition. Minimality is
/// not rechecked.
std::string verify_certificate(const Graph& g, const EdgeCertificate& cert, const Rational& t);

struct MinimalityResult {
  enum class Failure { kNone, kToughnessMismatch, kEdgeKeepsToughness };

  bool holds = false;
  Failure failure = Failure::kNone;
  ToughnessValue tau;
  std::optional<Edge> failing_edge;
  std::optional<ToughnessValue> failing_edge_toughness;
  /// One per edge, in edge order, when holds and certificates were requested.
  std::vector<EdgeCertificate> certificates;
};

/// tau(g) == t and tau(g - e) < t for every edge e.
MinimalityResult is_minimally_t_tough(const Graph& g, const Rational& t, bool with_certificates = true);

/// Neighbourhood bookkeeping on a certificate with D(e) nonempty.
struct DecompositionStats {
  VertexSet s1;                          // N_S(C(e)) - N_S(D(e))
  VertexSet n_s_c;                       // N_S(C(e))
  VertexSet n_s_d;                       // N_S(D(e))
  std::vector<VertexSet> d_components;   // components of G - S(e) - C(e)
  std::vector<VertexSet> n_s_d_components;  // N_S(C_i), aligned with d_components
};

/// Throws DECOMPOSITION_UNDEFINED when D(e) is empty.
DecompositionStats certificate_decomposition_stats(const EdgeCertificate& cert, const Graph& g);

}  // namespace tough
