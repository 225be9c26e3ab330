#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tough/connectivity.hpp"
#include "tough/graph.hpp"
#include "tough/rational.hpp"
#include "tough/toughness.hpp"
#include "tough/verdict.hpp"

namespace tough {

struct Claw {
  int center = 0;
  std::array<int, 3> leaves{};
};

/// First induced K_{1,3} in (center, leaves) lexicographic order.
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Applicable to noncomplete claw-free graphs; holds iff 2 tau = kappa exactly.
ClauseVerdict check_matthews_sumner(const Graph& g);

struct ClauseOptions {
  /// Evaluate the second conclusion of clause 4 ("at least 2t-1 vertices of
  /// N_S(C(e)) lie in 2t-vertex-cuts"), which is off by default.
  bool exhaustive = false;
};

/// Endpoint-cut statement for a certificate with D(e) empty: either
/// delta(G) <= 2t, or both endpoints of e lie in 2t-vertex-cuts.
/// The certificate overload trusts the caller that g is minimally t-tough.
ClauseVerdict check_endpoint_cuts(const Graph& g, const Rational& t, const EdgeCertificate& cert,
                                  CutMembership& cuts);
ClauseVerdict check_endpoint_cuts(const Graph& g, const Rational& t, const Edge& e);

/// The six neighbourhood clauses for a certificate with D(e) nonempty, in
/// order (1)..(6). The certificate overload trusts the caller that g is
/// minimally t-tough and claw-free; the edge overload verifies both and
/// reports every clause as not applicable otherwise.
std::vector<ClauseVerdict> check_neighbourhood_clauses(const Graph& g, const Rational& t,
                                                       const EdgeCertificate& cert, CutMembership& cuts,
                                                       const ClauseOptions& options = {});
std::vector<ClauseVerdict> check_neighbourhood_clauses(const Graph& g, const Rational& t, const Edge& e,
                                                       const ClauseOptions& options = {});

/// Minimum-degree bound for minimally t-tough claw-free graphs.
struct DegreeBoundReport {
  Rational t;
  int delta = 0;
  /// ceil((10t - 5) / 3) for t >= 2; 1, 2, 3 for t = 1/2, 1, 3/2; absent otherwise.
  std::optional<int> bound;
  std::string bound_source;
  bool satisfied = true;  // delta <= bound (true when no bound is known)
  int two_t_ceiling = 0;  // ceil(2t)
  bool two_t_degree_present = false;  // some vertex has degree exactly ceil(2t)
};

/// Exact ceiling of (10t - 5) / 3.
std::int64_t degree_bound_ceiling(const Rational& t);
std::optional<int> known_degree_bound(const Rational& t, std::string* source = nullptr);

DegreeBoundReport check_degree_bound(const Graph& g, const Rational& t);

/// Result of undoing the tree construction for minimally 1/2-tough claw-free
/// graphs: every triangle is turned back into a degree-3 tree vertex.
struct TreeInversion {
  bool reconstructible = false;
  std::string reason;
  Graph tree;  // vertices 0..n-1 of g, then one vertex per triangle
};

TreeInversion invert_half_tough_construction(const Graph& g);

/// Applicable iff g is minimally 1/2-tough and claw-free; holds iff g is the
/// image of a valid tree under the triangle construction.
ClauseVerdict check_half_tough_characterization(const Graph& g);

}  // namespace tough
