#include "tough/structure.hpp"

#include <algorithm>

#include "tough/error.hpp"
#include "tough/generators.hpp"

namespace tough {
namespace {

/// Integer value of 2t, when it is one.
std::optional<int> cut_size(const Rational& t) {
  Rational two_t = Rational(2) * t;
  if (!two_t.is_integer()) return std::nullopt;
  return static_cast<int>(two_t.num());
}

/// Vertices of `set` that lie in no k-vertex-cut.
Mask outside_cuts(CutMembership& cuts, Mask set, int k) { return set & ~cuts.cover(k); }

ClauseVerdict make(std::string clause) {
  ClauseVerdict v;
  v.clause = std::move(clause);
  v.applicable = true;
  return v;
}

void fail(ClauseVerdict& v, std::string note, std::vector<NamedSet> evidence) {
  v.holds = false;
  v.note = std::move(note);
  v.evidence = std::move(evidence);
}

void not_evaluable(ClauseVerdict& v, const Rational& t) {
  v.evaluable = false;
  v.note = "2t = " + (Rational(2) * t).str() + " is not an integer; 2t-vertex-cuts are undefined";
}

VertexSet set_of(Mask m) { return VertexSet::from_mask(m); }

}  // namespace

std::optional<Claw> find_claw(const Graph& g) {
  require_rows(g, "find_claw");
  for (int c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return Claw{c, {nb[i], nb[j], nb[k]}};
        }
      }
    }
  }
  return std::nullopt;
}

ClauseVerdict check_matthews_sumner(const Graph& g) {
  if (g.is_complete()) return ClauseVerdict::vacuous("ms", "complete graph");
  if (auto claw = find_claw(g)) {
    ClauseVerdict v = ClauseVerdict::vacuous("ms", "graph has a claw centred at " + std::to_string(claw->center));
    v.evidence = {{"claw", VertexSet{claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]}}};
    return v;
  }
  ClauseVerdict v = make("ms");
  ToughnessValue tau = toughness(g);
  Connectivity kappa = vertex_connectivity(g);
  std::vector<NamedSet> sets{{"tau_witness", tau.witness}, {"kappa_cut", kappa.witness.cut}};
  if (Rational(2) * tau.value != Rational(kappa.kappa)) {
    fail(v, "2*tau = " + (Rational(2) * tau.value).str() + " but kappa = " + std::to_string(kappa.kappa), sets);
  } else {
    v.note = "tau = " + tau.str() + ", kappa = " + std::to_string(kappa.kappa);
    v.evidence = std::move(sets);
  }
  return v;
}

ClauseVerdict check_endpoint_cuts(const Graph& g, const Rational& t, const EdgeCertificate& cert,
                                  CutMembership& cuts) {
  if (!cert.d_of_e.empty()) return ClauseVerdict::vacuous("lemma23", "D(e) is nonempty");
  ClauseVerdict v = make("lemma23");
  const int delta = degree_profile(g).min_degree;
  if (Rational(delta) <= Rational(2) * t) {
    v.note = "delta = " + std::to_string(delta) + " <= 2t";
    return v;
  }
  auto k = cut_size(t);
  if (!k) {
    not_evaluable(v, t);
    return v;
  }
  Mask ends = bit(cert.edge.u) | bit(cert.edge.v);
  Mask missing = outside_cuts(cuts, ends, *k);
  if (missing != 0) {
    fail(v, "delta > 2t and an endpoint lies in no " + std::to_string(*k) + "-vertex-cut",
         {{"S", cert.s}, {"endpoints_outside_cuts", set_of(missing)}});
  } else {
    v.note = "both endpoints lie in " + std::to_string(*k) + "-vertex-cuts";
  }
  return v;
}

ClauseVerdict check_endpoint_cuts(const Graph& g, const Rational& t, const Edge& e) {
  EdgeCertificate cert = edge_certificate(g, e, t);
  CutMembership cuts(g);
  return check_endpoint_cuts(g, t, cert, cuts);
}

std::vector<ClauseVerdict> check_neighbourhood_clauses(const Graph& g, const Rational& t,
                                                       const EdgeCertificate& cert, CutMembership& cuts,
                                                       const ClauseOptions& options) {
  std::vector<ClauseVerdict> out;
  auto id = [](int i) { return "lemma24(" + std::to_string(i) + ")"; };
  if (cert.d_of_e.empty()) {
    for (int i = 1; i <= 6; ++i) out.push_back(ClauseVerdict::vacuous(id(i), "D(e) is empty"));
    return out;
  }

  const DecompositionStats stats = certificate_decomposition_stats(cert, g);
  const Rational two_t = Rational(2) * t;
  const Rational four_t = Rational(4) * t;
  const auto k2t = cut_size(t);
  const Mask s = cert.s.mask();
  const Mask c = cert.c_of_e.mask();
  const Mask nsc = stats.n_s_c.mask();
  const Mask s1 = stats.s1.mask();
  const int u = cert.edge.u;
  const int v = cert.edge.v;
  const Rational size_nsc(popcount(nsc));
  const Rational size_s1(popcount(s1));

  // Checks that every vertex of `set` lies in a 2t-vertex-cut; fills the
  // verdict and returns false when the check fails or cannot be stated.
  auto all_in_cuts = [&](ClauseVerdict& verdict, Mask set, const char* name) {
    if (!k2t) {
      not_evaluable(verdict, t);
      return false;
    }
    Mask missing = outside_cuts(cuts, set, *k2t);
    if (missing == 0) return true;
    fail(verdict, std::string("vertices of ") + name + " outside every 2t-vertex-cut",
         {{"S", cert.s}, {name, set_of(set)}, {"outside_cuts", set_of(missing)}});
    return false;
  };

  // (1) k(e) >= ceil(3t)  =>  |N_S(C) ∩ N_S(C_i)| <= 2t - 1 for every other component.
  {
    ClauseVerdict verdict = make(id(1));
    if (Rational(cert.k) < Rational((Rational(3) * t).ceil())) {
      verdict = ClauseVerdict::vacuous(id(1), "k(e) < ceil(3t)");
    } else {
      for (std::size_t i = 0; i < stats.d_components.size(); ++i) {
        Mask shared = nsc & stats.n_s_d_components[i].mask();
        if (Rational(popcount(shared)) > two_t - Rational(1)) {
          fail(verdict, "|N_S(C(e)) ∩ N_S(C_i)| exceeds 2t-1",
               {{"S", cert.s}, {"C_i", stats.d_components[i]}, {"shared", set_of(shared)}});
          break;
        }
      }
    }
    out.push_back(std::move(verdict));
  }

  // (2) |S1| <= ceil(t) - 1 and 2t <= |N_S(C)| <= 4t - 1 - |S1|; at equality
  // every vertex of S - S1 lies in a 2t-vertex-cut.
  {
    ClauseVerdict verdict = make(id(2));
    std::vector<NamedSet> sets{{"S", cert.s}, {"N_S(C)", stats.n_s_c}, {"S1", stats.s1}};
    if (size_s1 > Rational(t.ceil() - 1)) {
      fail(verdict, "|S1| exceeds ceil(t)-1", sets);
    } else if (size_nsc < two_t) {
      fail(verdict, "|N_S(C(e))| is below 2t", sets);
    } else if (size_nsc > four_t - Rational(1) - size_s1) {
      fail(verdict, "|N_S(C(e))| exceeds 4t-1-|S1|", sets);
    } else if (size_s1 == four_t - Rational(1) - size_nsc) {
      if (all_in_cuts(verdict, s & ~s1, "S-S1")) verdict.note = "equality case: S-S1 covered by 2t-vertex-cuts";
    } else {
      verdict.note = "bounds hold strictly";
    }
    out.push_back(std::move(verdict));
  }

  // (3) |N_S(C)| = 4t - 1  =>  every vertex of S lies in a 2t-vertex-cut.
  {
    ClauseVerdict verdict = make(id(3));
    if (size_nsc != four_t - Rational(1)) {
      verdict = ClauseVerdict::vacuous(id(3), "|N_S(C(e))| != 4t-1");
    } else {
      all_in_cuts(verdict, s, "S");
    }
    out.push_back(std::move(verdict));
  }

  // (4) |N_S(C)| = 4t - 2  =>  |N_S(C_j)| <= 2t + 1 for every other component,
  // and (exhaustive only) at least 2t - 1 vertices of N_S(C) lie in 2t-vertex-cuts.
  {
    ClauseVerdict verdict = make(id(4));
    if (size_nsc != four_t - Rational(2)) {
      verdict = ClauseVerdict::vacuous(id(4), "|N_S(C(e))| != 4t-2");
    } else {
      for (std::size_t j = 0; j < stats.d_components.size() && verdict.holds; ++j) {
        if (Rational(static_cast<std::int64_t>(stats.n_s_d_components[j].size())) > two_t + Rational(1)) {
          fail(verdict, "|N_S(C_j)| exceeds 2t+1",
               {{"S", cert.s}, {"C_j", stats.d_components[j]}, {"N_S(C_j)", stats.n_s_d_components[j]}});
        }
      }
      if (verdict.holds && options.exhaustive) {
        if (!k2t) {
          not_evaluable(verdict, t);
        } else {
          Mask covered = nsc & cuts.cover(*k2t);
          if (Rational(popcount(covered)) < two_t - Rational(1)) {
            fail(verdict, "fewer than 2t-1 vertices of N_S(C(e)) lie in 2t-vertex-cuts",
                 {{"S", cert.s}, {"N_S(C)", stats.n_s_c}, {"in_cuts", set_of(covered)}});
          }
        }
      }
    }
    out.push_back(std::move(verdict));
  }

  const Mask cu = cert.c_u.mask();
  const Mask cv = cert.c_v.mask();

  // (5) C_u != {u} and C_v != {v}.
  {
    ClauseVerdict verdict = make(id(5));
    if (cu == bit(u) || cv == bit(v)) {
      verdict = ClauseVerdict::vacuous(id(5), "C_u(e) = {u} or C_v(e) = {v}");
    } else {
      Mask pair = bit(u) | bit(v);
      Mask sees_only_edge = 0;
      for_each_bit(s, [&](int w) {
        if ((g.row(w) & c) == pair) sees_only_edge |= bit(w);
      });
      if (sees_only_edge != 0) {
        if (all_in_cuts(verdict, pair, "{u,v}")) verdict.note = "some w in S has N_C(w) = {u,v}; u and v in cuts";
      } else if (!k2t) {
        not_evaluable(verdict, t);
      } else {
        Mask left = outside_cuts(cuts, bit(u) | s1, *k2t);
        Mask right = outside_cuts(cuts, bit(v) | s1, *k2t);
        if (left != 0 && right != 0) {
          fail(verdict, "neither {u} ∪ S1 nor {v} ∪ S1 is covered by 2t-vertex-cuts",
               {{"S", cert.s}, {"S1", stats.s1}, {"u_side_outside", set_of(left)}, {"v_side_outside", set_of(right)}});
        } else {
          verdict.note = left == 0 ? "{u} ∪ S1 covered" : "{v} ∪ S1 covered";
        }
      }
    }
    out.push_back(std::move(verdict));
  }

  // (6) C_a = {a} and C_b != {b} for the edge ab (either orientation):
  // d(a) <= 2t + 1 or b lies in a 2t-vertex-cut.
  {
    ClauseVerdict verdict = make(id(6));
    bool any = false;
    auto orient = [&](int a, Mask ca, int b, Mask cb) {
      if (ca != bit(a) || cb == bit(b) || !verdict.holds || !verdict.evaluable) return;
      any = true;
      if (Rational(g.degree(a)) <= two_t + Rational(1)) return;
      if (!k2t) {
        not_evaluable(verdict, t);
      } else if (!cuts.contains(b, *k2t)) {
        fail(verdict, "d(" + std::to_string(a) + ") > 2t+1 and " + std::to_string(b) + " lies in no 2t-vertex-cut",
             {{"S", cert.s}, {"singleton_side", VertexSet{a}}, {"other_end", VertexSet{b}}});
      }
    };
    orient(u, cu, v, cv);
    orient(v, cv, u, cu);
    if (!any) verdict = ClauseVerdict::vacuous(id(6), "neither side of e is a lone endpoint with the other side larger");
    out.push_back(std::move(verdict));
  }
  return out;
}

std::vector<ClauseVerdict> check_neighbourhood_clauses(const Graph& g, const Rational& t, const Edge& e,
                                                       const ClauseOptions& options) {
  if (!is_claw_free(g) || !is_minimally_t_tough(g, t, false).holds) {
    std::vector<ClauseVerdict> out;
    for (int i = 1; i <= 6; ++i) {
      out.push_back(ClauseVerdict::vacuous("lemma24(" + std::to_string(i) + ")",
                                           "graph is not minimally t-tough and claw-free"));
    }
    return out;
  }
  EdgeCertificate cert = edge_certificate(g, e, t);
  CutMembership cuts(g);
  return check_neighbourhood_clauses(g, t, cert, cuts, options);
}

std::int64_t degree_bound_ceiling(const Rational& t) {
  return ((Rational(10) * t - Rational(5)) / Rational(3)).ceil();
}

std::optional<int> known_degree_bound(const Rational& t, std::string* source) {
  auto set = [&](const char* s) {
    if (source != nullptr) *source = s;
  };
  if (t >= Rational(2)) {
    set("ceil((10t-5)/3)");
    return static_cast<int>(degree_bound_ceiling(t));
  }
  if (t == Rational(1, 2)) {
    set("minimally 1/2-tough claw-free: degree 1");
    return 1;
  }
  if (t == Rational(1)) {
    set("minimally 1-tough claw-free: degree 2");
    return 2;
  }
  if (t == Rational(3, 2)) {
    set("minimally 3/2-tough claw-free: degree 3");
    return 3;
  }
  set("none known");
  return std::nullopt;
}

DegreeBoundReport check_degree_bound(const Graph& g, const Rational& t) {
  DegreeBoundReport r;
  r.t = t;
  DegreeProfile profile = degree_profile(g);
  r.delta = profile.min_degree;
  r.bound = known_degree_bound(t, &r.bound_source);
  r.satisfied = !r.bound || r.delta <= *r.bound;
  r.two_t_ceiling = static_cast<int>((Rational(2) * t).ceil());
  r.two_t_degree_present =
      std::find(profile.degrees.begin(), profile.degrees.end(), r.two_t_ceiling) != profile.degrees.end();
  return r;
}

TreeInversion invert_half_tough_construction(const Graph& g) {
  require_rows(g, "invert_half_tough_construction");
  TreeInversion inv;
  const int n = g.order();
  if (n == 0 || !is_connected(g)) {
    inv.reason = "graph is empty or disconnected";
    return inv;
  }
  std::vector<std::array<int, 3>> triangles;
  for (const Edge& e : g.edges()) {
    Mask common = g.row(e.u) & g.row(e.v);
    if (popcount(common) > 1) {
      inv.reason = "edge " + to_string(e) + " lies in more than one triangle";
      return inv;
    }
    if (common != 0 && lowest(common) > e.v) triangles.push_back({e.u, e.v, lowest(common)});
  }
  // With edge-disjoint triangles, every cycle is a triangle exactly when the
  // cycle space is spanned by them.
  if (g.size() - n + 1 != static_cast<int>(triangles.size())) {
    inv.reason = "graph has a cycle that is not a triangle";
    return inv;
  }
  std::vector<Edge> tree_edges;
  for (const Edge& e : g.edges()) {
    if ((g.row(e.u) & g.row(e.v)) == 0) tree_edges.push_back(e);
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    int x = n + static_cast<int>(i);
    for (int a : triangles[i]) tree_edges.emplace_back(a, x);
  }
  inv.tree = Graph(n + static_cast<int>(triangles.size()), tree_edges);
  TreeSpec spec(inv.tree);
  if (!spec.valid()) {
    inv.reason = !spec.is_tree             ? "reconstruction is not a tree"
                 : !spec.max_degree_ok     ? "reconstructed tree has a vertex of degree > 3"
                                           : "degree-1 and degree-3 vertices of the tree are adjacent";
    return inv;
  }
  for (int v = 0; v < n; ++v) {
    if (inv.tree.degree(v) == 3) {
      inv.reason = "vertex " + std::to_string(v) + " would have tree degree 3 and be deleted";
      return inv;
    }
  }
  if (!(build_half_tough(spec) == g)) {
    inv.reason = "rebuilding from the tree does not reproduce the graph";
    return inv;
  }
  inv.reconstructible = true;
  return inv;
}

ClauseVerdict check_half_tough_characterization(const Graph& g) {
  if (g.order() == 0 || !is_claw_free(g)) return ClauseVerdict::vacuous("thm15", "graph has a claw");
  if (!is_minimally_t_tough(g, Rational(1, 2), false).holds) {
    return ClauseVerdict::vacuous("thm15", "graph is not minimally 1/2-tough");
  }
  ClauseVerdict v = make("thm15");
  TreeInversion inv = invert_half_tough_construction(g);
  if (!inv.reconstructible) {
    fail(v, inv.reason, {});
  } else {
    v.note = "rebuilt from a tree on " + std::to_string(inv.tree.order()) + " vertices";
  }
  return v;
}

}  // namespace tough
