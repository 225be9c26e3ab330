#pragma once

#include <map>
#include <vector>

#include "tough/graph.hpp"
#include "tough/verdict.hpp"

namespace tough {

struct CutWitness {
  VertexSet cut;
  int side_component_count = 0;  // w(G - cut)
};

struct Connectivity {
  int kappa = 0;
  /// K_n: kappa = n - 1 and no witness.
  bool complete = false;
  CutWitness witness;
};

/// Exact kappa by Menger's theorem: unit-capacity max-flow on the
/// vertex-split digraph over non-adjacent pairs (Even's pair schedule).
/// Disconnected graphs give kappa = 0 with the empty cut.
Connectivity vertex_connectivity(const Graph& g);

/// True iff w(G - s) >= 2.
bool is_vertex_cut(const Graph& g, Mask s);

/// Every k-subset S with w(G - S) >= 2, in lexicographic order. Exponential;
/// meant for graphs with at most ~16 vertices.
std::vector<VertexSet> cuts_of_size(const Graph& g, int k);

/// All minimum vertex cuts (|S| = kappa). Empty for complete graphs.
std::vector<VertexSet> minimum_cuts(const Graph& g);

/// All vertex cuts of size exactly k that contain v, lexicographic.
/// Requires g connected and noncomplete and 1 <= k <= n-2.
std::vector<VertexSet> min_cuts_containing(const Graph& g, int v, int k);

/// Answers "is v contained in some k-vertex-cut" with one enumeration per k.
class CutMembership {
 public:
  explicit CutMembership(const Graph& g) : g_(g) {}

  /// Union of all k-vertex-cuts; empty when k is outside 1..n-2.
  Mask cover(int k);
  bool contains(int v, int k) { return tough::contains(cover(k), v); }

 private:
  const Graph& g_;
  std::map<int, Mask> cover_;
};

/// A minimum-cardinality fragment together with its boundary N(A).
///
/// A fragment is a component of G - T for a minimum cut T; the boundary of
/// such a component is T itself.
struct AtomRecord {
  VertexSet atom;
  VertexSet boundary;
  int kappa = 0;

  friend auto operator<=>(const AtomRecord&, const AtomRecord&) = default;
};

/// All atoms, sorted by (atom, boundary). Requires connected, noncomplete g.
std::vector<AtomRecord> atoms(const Graph& g);

/// For every atom A and every minimum cut T: A meets T only if A is inside
/// T and |A| <= kappa / 2. Complete graphs hold vacuously.
ClauseVerdict check_mader_atom_property(const Graph& g);

}  // namespace tough
