#include "oracles/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <queue>

namespace tough::oracle {
namespace {

using boost::multiprecision::cpp_int;

std::int64_t ceil_div(const cpp_int& a, const cpp_int& b) {
  // b > 0
  cpp_int q = a / b;
  cpp_int r = a % b;
  if (r != 0 && a > 0) q += 1;
  return static_cast<std::int64_t>(q);
}

}  // namespace

int components(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (!removed[y] && !seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
  }
  return count;
}

BruteToughness toughness(const Graph& g) {
  const int n = g.order();
  BruteToughness out;
  bool complete = true;
  for (int u = 0; u < n && complete; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        complete = false;
        break;
      }
    }
  }
  if (complete) {
    out.infinite = true;
    return out;
  }
  bool have = false;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<bool> removed(n, false);
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if ((subset >> v) & 1U) {
        removed[v] = true;
        members.push_back(v);
      }
    }
    int w = components(g, removed);
    if (w < 2) continue;
    Rational ratio(static_cast<std::int64_t>(members.size()), w);
    if (!have || ratio < out.value || (ratio == out.value && members < out.witness)) {
      have = true;
      out.value = ratio;
      out.witness = members;
    }
  }
  return out;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<bool> removed(n, false);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if ((subset >> v) & 1U) {
        removed[v] = true;
        ++size;
      }
    }
    if (size < best && components(g, removed) >= 2) best = size;
  }
  return best;
}

bool claw_free(const Graph& g) {
  const int n = g.order();
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int d = b + 1; d < n; ++d) {
          if (!g.adjacent(c, a) || !g.adjacent(c, b) || !g.adjacent(c, d)) continue;
          if (!g.adjacent(a, b) && !g.adjacent(a, d) && !g.adjacent(b, d)) return false;
        }
      }
    }
  }
  return true;
}

std::int64_t degree_bound_ceiling(std::int64_t p, std::int64_t q) {
  cpp_int num = cpp_int(10) * p - cpp_int(5) * q;
  cpp_int den = cpp_int(3) * q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return ceil_div(num, den);
}

std::int64_t double_ceiling(std::int64_t p, std::int64_t q) {
  cpp_int num = cpp_int(2) * p;
  cpp_int den = q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return ceil_div(num, den);
}

}  // namespace tough::oracle
