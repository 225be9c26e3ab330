#include "tough/toughness.hpp"

#include <algorithm>

#include "tough/connectivity.hpp"
#include "tough/error.hpp"

namespace tough {
namespace {

bool lex_less(Mask a, Mask b) { return VertexSet::from_mask(a) < VertexSet::from_mask(b); }

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolverOptions& options, SolverStats& stats)
      : g_(g), n_(g.order()), options_(options), stats_(stats) {
    for (int v = 0; v < n_; ++v) {
      // A vertex of an optimal set touches at least two components of G - S.
      if (g.degree(v) >= 2) eligible_ |= bit(v);
    }
  }

  void seed(Rational ratio, Mask set) {
    best_ = ratio;
    best_set_ = set;
  }

  void search_size(int k) {
    k_ = k;
    descend(0, k, eligible_);
  }

  const Rational& best() const { return best_; }
  Mask best_set() const { return best_set_; }

 private:
  void descend(Mask chosen, int remaining, Mask pool) {
    ++stats_.nodes;
    if (remaining == 0) {
      leaf(chosen);
      return;
    }
    if (popcount(pool) < remaining) return;

    Mask outside = g_.vertex_mask() & ~chosen;
    int max_degree = 0;
    bool dead = false;
    for_each_bit(chosen, [&](int v) { dead = dead || popcount(g_.row(v) & outside) < 2; });
    if (dead) return;
    for_each_bit(outside, [&](int v) { max_degree = std::max(max_degree, popcount(g_.row(v) & outside)); });

    int now = count_components(g_, chosen);
    int bound = options_.inject_pruning_fault ? now : now + remaining * std::max(max_degree - 1, 0);
    bound = std::min(bound, n_ - k_);
    if (bound < 2 || Rational(k_, bound) > best_) return;

    while (popcount(pool) >= remaining) {
      int v = lowest(pool);
      pool &= pool - 1;
      descend(chosen | bit(v), remaining - 1, pool);
    }
  }

  void leaf(Mask chosen) {
    ++stats_.leaves;
    int w = count_components(g_, chosen);
    if (w < 2) return;
    Rational ratio(k_, w);
    if (ratio < best_ || (ratio == best_ && lex_less(chosen, best_set_))) {
      best_ = ratio;
      best_set_ = chosen;
    }
  }

  const Graph& g_;
  int n_;
  const SolverOptions& options_;
  SolverStats& stats_;
  Mask eligible_ = 0;
  int k_ = 0;
  Rational best_;
  Mask best_set_ = 0;
};

/// Components of (G - e) - s containing e.u and e.v.
std::pair<Mask, Mask> split_sides(const Graph& g, const Edge& e, Mask s) {
  Graph h = g.without_edge(e);
  return {component_of(h, s, e.u), component_of(h, s, e.v)};
}

EdgeCertificate decompose(const Graph& g, const Edge& e, Mask s, bool bridge_case) {
  EdgeCertificate cert;
  cert.edge = e;
  cert.bridge_case = bridge_case;
  cert.s = VertexSet::from_mask(s);
  cert.k = popcount(s);
  Mask c = component_of(g, s, e.u);
  cert.c_of_e = VertexSet::from_mask(c);
  cert.d_of_e = VertexSet::from_mask(g.vertex_mask() & ~s & ~c);
  auto [cu, cv] = split_sides(g, e, s);
  cert.c_u = VertexSet::from_mask(cu);
  cert.c_v = VertexSet::from_mask(cv);
  return cert;
}

// w * t <= k, compared exactly.
bool at_most_ratio(int w, int k, const Rational& t) { return Rational(w) * t <= Rational(k); }

bool qualifies(const Graph& g, const Graph& minus_e, const Edge& e, Mask s, const Rational& t) {
  if (component_of(minus_e, s, e.u) & bit(e.v)) return false;  // e not a bridge of G - s
  int k = popcount(s);
  int w = count_components(g, s);
  return at_most_ratio(w, k, t) && !at_most_ratio(w + 1, k, t);
}

void require_positive(const Rational& t) {
  if (t <= Rational(0)) throw Error(ErrorCode::kInvalidArgument, "t must be positive, got " + t.str());
}

std::vector<Mask> minimum_certificate_sets(const Graph& g, const Edge& e, const Rational& t, bool first_only) {
  Graph minus_e = g.without_edge(e);
  Mask pool = g.vertex_mask() & ~bit(e.u) & ~bit(e.v);
  std::vector<Mask> found;
  for (int k = 1; k <= popcount(pool); ++k) {
    for_each_k_subset(pool, k, [&](Mask s) {
      if (first_only && !found.empty()) return;
      if (qualifies(g, minus_e, e, s, t)) found.push_back(s);
    });
    if (!found.empty()) break;
  }
  return found;
}

void require_certifiable(const Graph& g, const Edge& e, const Rational& t) {
  require_rows(g, "edge_certificate");
  require_positive(t);
  if (!g.has_edge(e)) throw Error(ErrorCode::kInvalidArgument, "edge " + to_string(e) + " not in graph");
  ToughnessValue rest = toughness(g.without_edge(e));
  if (rest.at_least(t)) {
    throw Error(ErrorCode::kNoCertificate,
                "tau(G - " + to_string(e) + ") = " + rest.str() + " is not below t = " + t.str());
  }
}

}  // namespace

ToughnessValue toughness(const Graph& g, const SolverOptions& options, SolverStats* stats) {
  require_rows(g, "toughness");
  if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "toughness of the empty graph");
  if (g.is_complete()) return ToughnessValue::infinite();
  if (count_components(g, 0) >= 2) return ToughnessValue::finite(Rational(0), {});

  SolverStats local;
  SolverStats& s = stats != nullptr ? *stats : local;
  Connectivity c = vertex_connectivity(g);
  BranchAndBound search(g, options, s);
  search.seed(Rational(c.kappa, c.witness.side_component_count), c.witness.cut.mask());
  const int n = g.order();
  for (int k = c.kappa; k <= n - 2; ++k) {
    // k / (n - k) is the best any k-set can do, and it grows with k.
    if (Rational(k, n - k) > search.best()) break;
    search.search_size(k);
  }
  return ToughnessValue::finite(search.best(), VertexSet::from_mask(search.best_set()));
}

bool is_t_tough(const Graph& g, const Rational& t) {
  if (t < Rational(0)) throw Error(ErrorCode::kInvalidArgument, "t must be nonnegative, got " + t.str());
  return toughness(g).at_least(t);
}

EdgeCertificate edge_certificate(const Graph& g, const Edge& e, const Rational& t) {
  require_certifiable(g, e, t);
  if (is_bridge(g, e)) return decompose(g, e, 0, true);
  auto sets = minimum_certificate_sets(g, e, t, true);
  if (sets.empty()) {
    throw Error(ErrorCode::kNoCertificate, "no certificate set exists for edge " + to_string(e) + " at t = " + t.str());
  }
  return decompose(g, e, sets.front(), false);
}

std::vector<EdgeCertificate> all_minimum_certificates(const Graph& g, const Edge& e, const Rational& t) {
  require_certifiable(g, e, t);
  if (is_bridge(g, e)) return {decompose(g, e, 0, true)};
  std::vector<EdgeCertificate> out;
  for (Mask s : minimum_certificate_sets(g, e, t, false)) out.push_back(decompose(g, e, s, false));
  if (out.empty()) {
    throw Error(ErrorCode::kNoCertificate, "no certificate set exists for edge " + to_string(e) + " at t = " + t.str());
  }
  return out;
}

std::string verify_certificate(const Graph& g, const EdgeCertificate& cert, const Rational& t) {
  const Edge& e = cert.edge;
  if (!g.has_edge(e)) return "edge not in graph";
  if (cert.k != static_cast<int>(cert.s.size())) return "k differs from |S|";
  if (cert.s.contains(e.u) || cert.s.contains(e.v)) return "S contains an endpoint of e";
  require_subset(g, cert.s);
  Mask s = cert.s.mask();
  if (cert.bridge_case) {
    if (!cert.s.empty()) return "bridge case with nonempty S";
    if (!is_bridge(g, e)) return "bridge case but e is not a bridge of G";
  } else {
    int w = count_components(g, s);
    Graph minus_e = g.without_edge(e);
    int w_minus = count_components(minus_e, s);
    if (!at_most_ratio(w, cert.k, t)) return "w(G-S) exceeds |S|/t";
    if (at_most_ratio(w_minus, cert.k, t)) return "w((G-e)-S) does not exceed |S|/t";
    if (component_of(minus_e, s, e.u) & bit(e.v)) return "e is not a bridge of G-S";
  }
  EdgeCertificate expected = decompose(g, e, s, cert.bridge_case);
  if (expected.c_of_e != cert.c_of_e) return "C(e) mismatch";
  if (expected.d_of_e != cert.d_of_e) return "D(e) mismatch";
  if (expected.c_u != cert.c_u || expected.c_v != cert.c_v) return "C_u/C_v mismatch";
  return {};
}

MinimalityResult is_minimally_t_tough(const Graph& g, const Rational& t, bool with_certificates) {
  require_positive(t);
  MinimalityResult result;
  result.tau = toughness(g);
  if (result.tau.is_infinite() || result.tau.value != t) {
    result.failure = MinimalityResult::Failure::kToughnessMismatch;
    return result;
  }
  for (const Edge& e : g.edges()) {
    ToughnessValue rest = toughness(g.without_edge(e));
    if (rest.at_least(t)) {
      result.failure = MinimalityResult::Failure::kEdgeKeepsToughness;
      result.failing_edge = e;
      result.failing_edge_toughness = rest;
      return result;
    }
  }
  result.holds = true;
  if (with_certificates) {
    for (const Edge& e : g.edges()) result.certificates.push_back(edge_certificate(g, e, t));
  }
  return result;
}

DecompositionStats certificate_decomposition_stats(const EdgeCertificate& cert, const Graph& g) {
  if (cert.d_of_e.empty()) {
    throw Error(ErrorCode::kDecompositionUndefined, "D(e) is empty for edge " + to_string(cert.edge));
  }
  require_rows(g, "certificate_decomposition_stats");
  Mask s = cert.s.mask();
  Mask c = cert.c_of_e.mask();
  Mask d = cert.d_of_e.mask();
  DecompositionStats stats;
  Mask n_s_c = neighborhood(g, c, s);
  Mask n_s_d = neighborhood(g, d, s);
  stats.n_s_c = VertexSet::from_mask(n_s_c);
  stats.n_s_d = VertexSet::from_mask(n_s_d);
  stats.s1 = VertexSet::from_mask(n_s_c & ~n_s_d);
  for (Mask comp : component_masks(g, s | c)) {
    stats.d_components.push_back(VertexSet::from_mask(comp));
    stats.n_s_d_components.push_back(VertexSet::from_mask(neighborhood(g, comp, s)));
  }
  return stats;
}

}  // namespace tough
