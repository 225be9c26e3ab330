#include <algorithm>
#include <map>
#include <set>

#include "tough/error.hpp"
#include "tough/generators.hpp"
#include "tough/graph6.hpp"

namespace tough {
namespace {

constexpr int kMaxCanonicalOrder = 16;

using Coloring = std::vector<int>;

/// Replaces colours by their rank; returns the number of classes.
template <typename Key>
int rank_by(const std::vector<Key>& keys, Coloring& color) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

/// Colour refinement to the coarsest equitable partition finer than `color`.
int refine(const Graph& g, Coloring& color) {
  const int n = g.order();
  int classes = rank_by(color, color);
  while (true) {
    std::vector<std::vector<int>> keys(n, std::vector<int>(classes + 1, 0));
    for (int v = 0; v < n; ++v) {
      keys[v][0] = color[v];
      for (int u : g.neighbors(v)) ++keys[v][1 + color[u]];
    }
    int next = rank_by(keys, color);
    if (next == classes) return classes;
    classes = next;
  }
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    search(Coloring(g_.order(), 0));
    return best_perm_;
  }

 private:
  bool twins(int a, int b) const {
    return (g_.row(a) & ~bit(b)) == (g_.row(b) & ~bit(a));
  }

  void search(Coloring color) {
    const int n = g_.order();
    int classes = refine(g_, color);
    if (classes == n) {
      leaf(color);
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : color) ++size[c];
    int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    std::vector<int> cell;
    for (int v = 0; v < n; ++v) {
      if (color[v] == target) cell.push_back(v);
    }
    // Swapping two twins of one cell is an automorphism fixing the colouring,
    // so a cell of mutual twins needs only one branch.
    bool all_twins = std::all_of(cell.begin() + 1, cell.end(), [&](int v) { return twins(cell.front(), v); });
    for (int v : cell) {
      Coloring child(n);
      for (int u = 0; u < n; ++u) child[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      search(std::move(child));
      if (all_twins) break;
    }
  }

  void leaf(const Coloring& position) {
    const int n = g_.order();
    std::vector<Mask> code(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int u : g_.neighbors(v)) code[position[v]] |= bit(position[u]);
    }
    if (best_perm_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_perm_ = position;
    }
  }

  const Graph& g_;
  std::vector<Mask> best_code_;
  std::vector<int> best_perm_;
};

/// AHU encoding of the tree rooted at `root`.
std::string rooted_code(const Graph& t, int root, int parent) {
  std::vector<std::string> children;
  for (int c : t.neighbors(root)) {
    if (c != parent) children.push_back(rooted_code(t, c, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : t.neighbors(v)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_code(const Graph& t) {
  std::string best;
  for (int c : tree_centers(t)) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kUnsupportedSize, "canonical_form supports n <= " + std::to_string(kMaxCanonicalOrder));
  }
  if (g.order() == 0) return g;
  return relabel(g, Canonicalizer(g).run());
}

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) throw Error(ErrorCode::kOutOfRange, "enumerate_trees supports 1 <= n <= 16");
  std::map<std::string, Graph> level{{tree_code(Graph(1)), Graph(1)}};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [code, tree] : level) {
      for (int v = 0; v < tree.order(); ++v) {
        std::vector<Edge> edges = tree.edges();
        edges.emplace_back(v, order - 1);
        Graph grown(order, edges);
        next.try_emplace(tree_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

}  // namespace tough
