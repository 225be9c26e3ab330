#pragma once

#include <random>
#include <string>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

Graph make_cycle(int n);     // 0-1-...-(n-1)-0, n >= 3
Graph make_path(int n);      // 0-1-...-(n-1), n >= 1
Graph make_complete(int n);  // n >= 1
Graph make_star(int k);      // center 0, leaves 1..k, k >= 1
/// Triangle 0,1,2 with pendant vertices 3-0, 4-1, 5-2.
Graph make_net();
/// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram 5-7-9-6-8-5.
Graph make_petersen();

/// Each of the n(n-1)/2 pairs is an edge independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// A tree with its validity flags for the triangle construction. The flags
/// are always recomputed from the graph.
struct TreeSpec {
  Graph tree;
  bool is_tree = false;
  bool max_degree_ok = false;     // maximum degree <= 3
  bool ends_independent = false;  // degree-1 and degree-3 vertices independent

  explicit TreeSpec(Graph t);
  bool valid() const { return is_tree && max_degree_ok && ends_independent; }
};

/// Deletes every degree-3 vertex of the tree and joins its three neighbours
/// by a triangle. Surviving vertices keep their relative order. Throws
/// INVALID_TREE naming the violated condition.
Graph build_half_tough(const TreeSpec& spec);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 8, sorted by canonical graph6.
std::vector<Graph> enumerate_connected(int n);

/// One representative per isomorphism class of trees on n vertices,
/// 1 <= n <= 16.
std::vector<Graph> enumerate_trees(int n);

/// Relabelling of g that is identical for isomorphic graphs (n <= 16).
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// Permutes vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace tough
