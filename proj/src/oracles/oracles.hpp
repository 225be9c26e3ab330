#pragma once

// Brute-force reference computations. Nothing here shares code paths with
// the solvers it is compared against: no bitset rows, no pruning, plain
// adjacency-list BFS over every vertex subset.

#include <cstdint>
#include <optional>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough::oracle {

struct BruteToughness {
  bool infinite = false;
  Rational value;
  std::vector<int> witness;  // lexicographically least optimal set
};

/// Components of G - removed, counted by BFS.
int components(const Graph& g, const std::vector<bool>& removed);

/// Minimum of |S| / w(G - S) over all 2^n subsets.
BruteToughness toughness(const Graph& g);

/// Smallest |S| with w(G - S) >= 2; n - 1 for complete graphs.
int connectivity(const Graph& g);

/// Exhaustive independent-triple search.
bool claw_free(const Graph& g);

/// ceil((10 p/q - 5) / 3) evaluated with arbitrary-precision integers.
std::int64_t degree_bound_ceiling(std::int64_t p, std::int64_t q);

/// ceil(2 p/q) with arbitrary-precision integers.
std::int64_t double_ceiling(std::int64_t p, std::int64_t q);

}  // namespace tough::oracle
