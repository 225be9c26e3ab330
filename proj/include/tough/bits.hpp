#pragma once

#include <bit>
#include <cstdint>

namespace tough {

/// Vertex subset of a graph with at most 64 vertices, bit v set iff v is in the set.
using Mask = std::uint64_t;

inline constexpr int kMaxBitsetOrder = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr bool contains(Mask m, int v) { return (m >> v) & 1U; }

/// Calls f(v) for every set bit, in increasing order.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

namespace detail {

template <typename F>
void k_subsets(Mask pool, int k, Mask chosen, F& f) {
  if (k == 0) {
    f(chosen);
    return;
  }
  while (popcount(pool) >= k) {
    int v = lowest(pool);
    pool &= pool - 1;
    k_subsets(pool, k - 1, chosen | bit(v), f);
  }
}

}  // namespace detail

/// Calls f(subset) for every k-element subset of pool, in lexicographic
/// order of the sorted member lists.
template <typename F>
void for_each_k_subset(Mask pool, int k, F&& f) {
  if (k < 0 || k > popcount(pool)) return;
  detail::k_subsets(pool, k, Mask{0}, f);
}

}  // namespace tough
