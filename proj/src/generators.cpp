#include "tough/generators.hpp"

#include <algorithm>
#include <set>

#include "tough/error.hpp"
#include "tough/graph6.hpp"

namespace tough {
namespace {

void require_order(int n, int least, const char* what) {
  if (n < least) {
    throw Error(ErrorCode::kOutOfRange, std::string(what) + " needs n >= " + std::to_string(least) + ", got " +
                                            std::to_string(n));
  }
}

}  // namespace

Graph make_cycle(int n) {
  require_order(n, 3, "make_cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_path(int n) {
  require_order(n, 1, "make_path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  require_order(n, 1, "make_complete");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph make_star(int k) {
  require_order(k, 1, "make_star");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(k + 1, edges);
}

Graph make_net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  require_order(n, 0, "random_graph");
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

TreeSpec::TreeSpec(Graph t) : tree(std::move(t)) {
  const int n = tree.order();
  is_tree = n >= 1 && tree.size() == n - 1 && is_connected(tree);
  max_degree_ok = true;
  ends_independent = true;
  for (int v = 0; v < n; ++v) {
    int d = tree.degree(v);
    if (d > 3) max_degree_ok = false;
    if (d != 1 && d != 3) continue;
    for (int u : tree.neighbors(v)) {
      int du = tree.degree(u);
      if (du == 1 || du == 3) ends_independent = false;
    }
  }
}

Graph build_half_tough(const TreeSpec& spec) {
  if (!spec.is_tree) throw Error(ErrorCode::kInvalidTree, "input is not a tree");
  if (!spec.max_degree_ok) throw Error(ErrorCode::kInvalidTree, "tree has a vertex of degree greater than 3");
  if (!spec.ends_independent) {
    throw Error(ErrorCode::kInvalidTree, "degree-1 and degree-3 vertices do not form an independent set");
  }
  const Graph& t = spec.tree;
  std::vector<int> index(t.order(), -1);
  int kept = 0;
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 3) index[v] = kept++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  for (int x = 0; x < t.order(); ++x) {
    if (t.degree(x) != 3) continue;
    auto nb = t.neighbors(x);
    edges.emplace_back(index[nb[0]], index[nb[1]]);
    edges.emplace_back(index[nb[0]], index[nb[2]]);
    edges.emplace_back(index[nb[1]], index[nb[2]]);
  }
  return Graph(kept, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::kOutOfRange, "enumerate_connected supports 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller class by one vertex reaches every class.
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      std::vector<Edge> edges = base.edges();
      const int last = order - 1;
      for (Mask nb = 1; nb < bit(last); ++nb) {
        std::vector<Edge> grown = edges;
        for_each_bit(nb, [&](int v) { grown.emplace_back(v, last); });
        Graph candidate = canonical_form(Graph(order, grown));
        if (seen.insert(write_graph6(candidate)).second) next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const Graph& a, const Graph& b) { return write_graph6(a) < write_graph6(b); });
  return level;
}

}  // namespace tough
