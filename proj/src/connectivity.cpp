#include "tough/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "tough/error.hpp"

namespace tough {
namespace {

constexpr int kInf = 1 << 20;

/// Vertex-split flow network: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t) : n_(2 * g.order()), cap_(n_ * n_, 0), s_(s), t_(t) {
    for (int v = 0; v < g.order(); ++v) {
      cap_[idx(in(v), out(v))] = (v == s || v == t) ? kInf : 1;
      for (int u : g.neighbors(v)) cap_[idx(out(v), in(u))] = kInf;
    }
  }

  /// Max number of internally disjoint s-t paths, capped at `limit`.
  int max_flow(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  /// Vertices whose split arc crosses the residual cut.
  Mask cut(int order) const {
    std::vector<bool> reach = reachable();
    Mask m = 0;
    for (int v = 0; v < order; ++v) {
      if (reach[in(v)] && !reach[out(v)]) m |= bit(v);
    }
    return m;
  }

 private:
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }
  int idx(int a, int b) const { return a * n_ + b; }

  std::vector<bool> reachable(std::vector<int>* parent = nullptr) const {
    std::vector<bool> seen(n_, false);
    std::queue<int> queue;
    seen[out(s_)] = true;
    queue.push(out(s_));
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop();
      for (int b = 0; b < n_; ++b) {
        if (!seen[b] && cap_[idx(a, b)] > 0) {
          seen[b] = true;
          if (parent != nullptr) (*parent)[b] = a;
          queue.push(b);
        }
      }
    }
    return seen;
  }

  bool augment() {
    std::vector<int> parent(n_, -1);
    std::vector<bool> seen = reachable(&parent);
    if (!seen[in(t_)]) return false;
    for (int b = in(t_); b != out(s_); b = parent[b]) {
      int a = parent[b];
      cap_[idx(a, b)] -= 1;
      cap_[idx(b, a)] += 1;
    }
    return true;
  }

  int n_;
  std::vector<int> cap_;
  int s_;
  int t_;
};

std::vector<VertexSet> to_sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_vertex_cut(const Graph& g, Mask s) { return count_components(g, s) >= 2; }

Connectivity vertex_connectivity(const Graph& g) {
  require_rows(g, "vertex_connectivity");
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "vertex connectivity of the empty graph");
  Connectivity result;
  if (g.is_complete()) {
    result.kappa = n - 1;
    result.complete = true;
    return result;
  }
  int parts = count_components(g, 0);
  if (parts >= 2) {
    result.witness.side_component_count = parts;
    return result;
  }

  int best = n - 2;  // a noncomplete graph always has a cut of size <= n - 2
  Mask best_cut = 0;
  bool found = false;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      SplitNetwork net(g, i, j);
      int flow = net.max_flow(found ? best : best + 1);
      if (!found || flow < best) {
        best = flow;
        best_cut = net.cut(n);
        found = true;
      }
    }
  }
  result.kappa = best;
  result.witness.cut = VertexSet::from_mask(best_cut);
  result.witness.side_component_count = count_components(g, best_cut);
  return result;
}

std::vector<VertexSet> cuts_of_size(const Graph& g, int k) {
  require_rows(g, "cuts_of_size");
  std::vector<VertexSet> out;
  if (k < 0 || k > g.order() - 2) return out;
  for_each_k_subset(g.vertex_mask(), k, [&](Mask s) {
    if (is_vertex_cut(g, s)) out.push_back(VertexSet::from_mask(s));
  });
  return out;
}

std::vector<VertexSet> minimum_cuts(const Graph& g) {
  Connectivity c = vertex_connectivity(g);
  if (c.complete) return {};
  return cuts_of_size(g, c.kappa);
}

std::vector<VertexSet> min_cuts_containing(const Graph& g, int v, int k) {
  require_rows(g, "min_cuts_containing");
  const int n = g.order();
  if (v < 0 || v >= n) throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " outside graph");
  if (g.is_complete()) throw Error(ErrorCode::kCompleteGraph, "complete graph has no vertex cuts");
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "min_cuts_containing requires a connected graph");
  if (k < 1 || k > n - 2) {
    throw Error(ErrorCode::kOutOfRange, "cut size " + std::to_string(k) + " outside 1.." + std::to_string(n - 2));
  }
  std::vector<Mask> found;
  // No cut is smaller than kappa.
  if (k < vertex_connectivity(g).kappa) return {};
  for_each_k_subset(g.vertex_mask() & ~bit(v), k - 1, [&](Mask rest) {
    Mask s = rest | bit(v);
    if (is_vertex_cut(g, s)) found.push_back(s);
  });
  return to_sorted_sets(found);
}

Mask CutMembership::cover(int k) {
  auto it = cover_.find(k);
  if (it != cover_.end()) return it->second;
  Mask m = 0;
  if (k >= 1 && k <= g_.order() - 2) {
    require_rows(g_, "CutMembership");
    for_each_k_subset(g_.vertex_mask(), k, [&](Mask s) {
      if ((s & ~m) != 0 && is_vertex_cut(g_, s)) m |= s;
    });
  }
  cover_.emplace(k, m);
  return m;
}

std::vector<AtomRecord> atoms(const Graph& g) {
  require_rows(g, "atoms");
  if (g.is_complete()) throw Error(ErrorCode::kCompleteGraph, "atoms are undefined for complete graphs");
  Connectivity c = vertex_connectivity(g);
  if (c.kappa == 0) throw Error(ErrorCode::kNotConnected, "atoms require a connected graph");

  std::vector<AtomRecord> out;
  int smallest = g.order();
  for (const VertexSet& cut : cuts_of_size(g, c.kappa)) {
    for (Mask comp : component_masks(g, cut.mask())) {
      int size = popcount(comp);
      if (size > smallest) continue;
      if (size < smallest) {
        smallest = size;
        out.clear();
      }
      out.push_back({VertexSet::from_mask(comp), cut, c.kappa});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClauseVerdict check_mader_atom_property(const Graph& g) {
  ClauseVerdict verdict;
  verdict.clause = "mader";
  if (g.is_complete()) {
    verdict.note = "complete graph";
    return verdict;
  }
  if (!is_connected(g)) {
    verdict.note = "disconnected graph";
    return verdict;
  }
  verdict.applicable = true;
  std::vector<AtomRecord> all_atoms = atoms(g);
  std::vector<VertexSet> cuts = cuts_of_size(g, all_atoms.front().kappa);
  const int kappa = all_atoms.front().kappa;
  for (const AtomRecord& a : all_atoms) {
    Mask atom = a.atom.mask();
    for (const VertexSet& cut : cuts) {
      Mask t = cut.mask();
      if ((atom & t) == 0) continue;
      bool inside = (atom & ~t) == 0;
      bool small = 2 * popcount(atom) <= kappa;
      if (!inside || !small) {
        verdict.holds = false;
        verdict.note = inside ? "atom meeting a minimum cut exceeds kappa/2" : "atom meets a minimum cut without lying inside it";
        verdict.evidence = {{"atom", a.atom}, {"boundary", a.boundary}, {"min_cut", cut}};
        return verdict;
      }
    }
  }
  verdict.note = std::to_string(all_atoms.size()) + " atoms against " + std::to_string(cuts.size()) + " minimum cuts";
  verdict.evidence = {{"atom", all_atoms.front().atom}, {"boundary", all_atoms.front().boundary}};
  return verdict;
}

}  // namespace tough
