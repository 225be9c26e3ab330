#include <doctest.h>

#include <algorithm>
#include <set>

#include "tough/error.hpp"
#include "tough/generators.hpp"
#include "tough/graph6.hpp"

using namespace tough;

TEST_CASE("connected graph counts") {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("tree counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (int n = 1; n <= 11; ++n) CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, 0.4, rng);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_graph6(g) == canonical_graph6(relabel(g, perm)));
  }
  CHECK(canonical_graph6(make_cycle(6)) != canonical_graph6(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("enumerated classes are pairwise non-isomorphic") {
  std::set<std::string> seen;
  for (const Graph& g : enumerate_connected(6)) CHECK(seen.insert(canonical_graph6(g)).second);
}

TEST_CASE("tree specs name the violated condition") {
  CHECK(TreeSpec(make_path(4)).valid());
  CHECK_FALSE(TreeSpec(make_cycle(4)).is_tree);
  CHECK_FALSE(TreeSpec(make_star(4)).max_degree_ok);
  // A degree-3 vertex next to a leaf.
  TreeSpec star3(make_star(3));
  CHECK_FALSE(star3.ends_independent);
  CHECK_THROWS_AS(build_half_tough(star3), Error);
}

TEST_CASE("building from a tree replaces degree-3 vertices by triangles") {
  // Spider with three legs of length 2: centre 0, legs 0-1-2, 0-3-4, 0-5-6.
  Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  TreeSpec spec(spider);
  REQUIRE(spec.valid());
  Graph g = build_half_tough(spec);
  CHECK(canonical_graph6(g) == canonical_graph6(make_net()));
  CHECK(build_half_tough(TreeSpec(make_path(5))) == make_path(5));
}

TEST_CASE("named families") {
  CHECK(make_petersen().size() == 15);
  CHECK(make_complete(5).is_complete());
  CHECK(make_star(4).degree(0) == 4);
  CHECK(make_net().size() == 6);
}
