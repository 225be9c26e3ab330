#include "tough/graph.hpp"

#include <algorithm>
#include <queue>

#include "tough/error.hpp"

namespace tough {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

VertexSet::VertexSet(std::initializer_list<int> vertices) : VertexSet(std::vector<int>(vertices)) {}

VertexSet::VertexSet(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw Error(ErrorCode::kOutOfRange, "negative vertex index " + std::to_string(vertices_.front()));
  }
}

VertexSet VertexSet::from_mask(Mask m) {
  VertexSet s;
  s.vertices_.reserve(popcount(m));
  for_each_bit(m, [&](int v) { s.vertices_.push_back(v); });
  return s;
}

Mask VertexSet::mask() const {
  Mask m = 0;
  for (int v : vertices_) {
    if (v >= kMaxBitsetOrder) throw Error(ErrorCode::kUnsupportedSize, "vertex index beyond bitset range");
    m |= bit(v);
  }
  return m;
}

bool VertexSet::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::string VertexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  finish();
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw Error(ErrorCode::kOutOfRange, "edge " + to_string(e) + " outside vertex range");
    if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(e.u));
    add_edge_unchecked(e.u, e.v);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidArgument, "repeated edge");
    }
  }
  finish();
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

void Graph::finish() {
  rows_.clear();
  if (!has_rows()) return;
  rows_.assign(n_, 0);
  for (int v = 0; v < n_; ++v) {
    for (int u : adj_[v]) rows_[v] |= bit(u);
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  if (has_rows()) return contains(rows_[u], v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(const Edge& e) const {
  if (!has_edge(e)) throw Error(ErrorCode::kInvalidArgument, "edge " + to_string(e) + " not in graph");
  Graph h = *this;
  auto drop = [](std::vector<int>& list, int x) { list.erase(std::find(list.begin(), list.end(), x)); };
  drop(h.adj_[e.u], e.v);
  drop(h.adj_[e.v], e.u);
  --h.m_;
  if (h.has_rows()) {
    h.rows_[e.u] &= ~bit(e.v);
    h.rows_[e.v] &= ~bit(e.u);
  }
  return h;
}

std::vector<int> ComponentPartition::members(int id) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (label[v] == id) out.push_back(static_cast<int>(v));
  }
  return out;
}

void require_rows(const Graph& g, const char* operation) {
  if (!g.has_rows()) {
    throw Error(ErrorCode::kUnsupportedSize,
                std::string(operation) + " supports at most 64 vertices, got " + std::to_string(g.order()));
  }
}

void require_subset(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.vertices().back() >= g.order()) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(s.vertices().back()) + " outside graph of order " +
                                            std::to_string(g.order()));
  }
}

ComponentPartition components_after_removal(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  ComponentPartition part;
  part.label.assign(g.order(), ComponentPartition::kRemoved);
  std::vector<bool> removed(g.order(), false);
  for (int v : s) removed[v] = true;
  std::vector<bool> seen(g.order(), false);
  for (int start = 0; start < g.order(); ++start) {
    if (removed[start] || seen[start]) continue;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      part.label[x] = part.count;
      for (int y : g.neighbors(x)) {
        if (!removed[y] && !seen[y]) {
          seen[y] = true;
          queue.push(y);
        }
      }
    }
    ++part.count;
  }
  return part;
}

Mask component_of(const Graph& g, Mask removed, int v) {
  Mask allowed = g.vertex_mask() & ~removed;
  Mask comp = bit(v);
  Mask frontier = comp;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int x) { next |= g.row(x); });
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

int count_components(const Graph& g, Mask removed) {
  Mask left = g.vertex_mask() & ~removed;
  int count = 0;
  while (left != 0) {
    left &= ~component_of(g, removed, lowest(left));
    ++count;
  }
  return count;
}

std::vector<Mask> component_masks(const Graph& g, Mask removed) {
  std::vector<Mask> out;
  Mask left = g.vertex_mask() & ~removed;
  while (left != 0) {
    Mask comp = component_of(g, removed, lowest(left));
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

Mask neighborhood(const Graph& g, Mask set, Mask within) {
  Mask out = 0;
  for_each_bit(set, [&](int v) { out |= g.row(v); });
  return out & ~set & within;
}

bool is_connected(const Graph& g) { return components_after_removal(g, {}).count <= 1; }

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "degree profile of the empty graph");
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  return p;
}

bool is_bridge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::kInvalidArgument, "edge " + to_string(e) + " not in graph");
  Graph h = g.without_edge(e);
  auto part = components_after_removal(h, {});
  return part.label[e.u] != part.label[e.v];
}

}  // namespace tough
