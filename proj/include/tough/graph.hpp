#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tough/bits.hpp"

namespace tough {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Strictly increasing list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);
  explicit VertexSet(std::vector<int> vertices);

  static VertexSet from_mask(Mask m);

  /// Requires every member < 64.
  Mask mask() const;

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(int v) const;
  int operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const std::vector<int>& vertices() const { return vertices_; }

  /// "{0,2,5}"
  std::string str() const;

  /// Lexicographic order on the sorted member lists.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> vertices_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps sorted neighbor lists for every order and, for n <= 64, one bitset
/// row per vertex. Operations that need the rows throw UNSUPPORTED_SIZE on
/// larger graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Rejects loops, out-of-range endpoints and repeated edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool has_rows() const { return n_ <= kMaxBitsetOrder; }
  Mask row(int v) const { return rows_[v]; }
  Mask vertex_mask() const { return low_bits(n_); }

  /// All edges in increasing (u, v) order.
  std::vector<Edge> edges() const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  bool is_complete() const { return 2 * static_cast<long long>(m_) == static_cast<long long>(n_) * (n_ - 1); }

  Graph without_edge(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void add_edge_unchecked(int u, int v);
  void finish();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Mask> rows_;
};

/// Components of G - S. Vertices of S carry kRemoved.
struct ComponentPartition {
  static constexpr int kRemoved = -1;

  int count = 0;
  std::vector<int> label;

  std::vector<int> members(int id) const;
};

struct DegreeProfile {
  int min_degree = 0;
  std::vector<int> degrees;
};

/// Throws UNSUPPORTED_SIZE when g has more than 64 vertices.
void require_rows(const Graph& g, const char* operation);

/// Throws OUT_OF_RANGE unless every member of s is a vertex of g.
void require_subset(const Graph& g, const VertexSet& s);

ComponentPartition components_after_removal(const Graph& g, const VertexSet& s);

/// w(G - removed) on the bitset rows.
int count_components(const Graph& g, Mask removed);

/// Vertex sets of the components of G - removed, ordered by smallest member.
std::vector<Mask> component_masks(const Graph& g, Mask removed);

/// Component of G - removed that contains v (v must not be removed).
Mask component_of(const Graph& g, Mask removed, int v);

/// N(X) - X, further restricted to `within`.
Mask neighborhood(const Graph& g, Mask set, Mask within = ~Mask{0});

bool is_connected(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

bool is_bridge(const Graph& g, const Edge& e);

}  // namespace tough
