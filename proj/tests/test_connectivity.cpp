#include <doctest.h>

#include <algorithm>

#include "oracles/oracles.hpp"
#include "tough/connectivity.hpp"
#include "tough/error.hpp"
#include "tough/generators.hpp"
#include "tough/graph6.hpp"

using namespace tough;

TEST_CASE("kappa of the fixtures") {
  CHECK(vertex_connectivity(make_cycle(4)).kappa == 2);
  CHECK(vertex_connectivity(make_star(3)).kappa == 1);
  CHECK(vertex_connectivity(make_petersen()).kappa == 3);
  CHECK(vertex_connectivity(make_net()).kappa == 1);
  Connectivity k5 = vertex_connectivity(make_complete(5));
  CHECK(k5.complete);
  CHECK(k5.kappa == 4);
  CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})).kappa == 0);
}

TEST_CASE("kappa witness is a cut of the reported size") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 10), 0.5, rng);
    Connectivity c = vertex_connectivity(g);
    CHECK(c.kappa == oracle::connectivity(g));
    if (!c.complete && c.kappa > 0) {
      CHECK(static_cast<int>(c.witness.cut.size()) == c.kappa);
      CHECK(is_vertex_cut(g, c.witness.cut.mask()));
    }
  }
}

TEST_CASE("minimum cuts of C5 are the non-adjacent pairs") {
  auto cuts = minimum_cuts(make_cycle(5));
  CHECK(cuts.size() == 5);
  CHECK(cuts.front() == VertexSet{0, 2});
  CHECK(cuts.back() == VertexSet{2, 4});
}

TEST_CASE("min_cuts_containing validates its arguments") {
  Graph c4 = make_cycle(4);
  CHECK_THROWS_AS(min_cuts_containing(make_complete(4), 0, 1), Error);
  CHECK_THROWS_AS(min_cuts_containing(Graph(3, {{0, 1}}), 0, 1), Error);
  CHECK_THROWS_AS(min_cuts_containing(c4, 0, 3), Error);
  CHECK(min_cuts_containing(c4, 0, 1).empty());
  auto cuts = min_cuts_containing(c4, 0, 2);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0] == VertexSet{0, 2});
}

TEST_CASE("cut membership agrees with direct enumeration") {
  Graph p = make_petersen();
  CutMembership cm(p);
  for (int k = 1; k <= 8; ++k) {
    Mask direct = 0;
    for (const auto& s : cuts_of_size(p, k)) direct |= s.mask();
    CHECK(cm.cover(k) == direct);
  }
  CHECK(cm.cover(2) == 0);
  CHECK(cm.cover(0) == 0);
}

TEST_CASE("atoms are the smallest fragments") {
  auto a = atoms(make_path(4));
  REQUIRE_FALSE(a.empty());
  for (const auto& r : a) CHECK(r.atom.size() == 1);
  auto pa = atoms(make_petersen());
  CHECK(pa.size() == 10);  // each vertex, cut off by its neighbourhood
}

TEST_CASE("atoms meeting a minimum cut lie inside it") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      ClauseVerdict v = check_mader_atom_property(g);
      CHECK_MESSAGE(!v.failed(), write_graph6(g));
      CHECK(v.applicable == !g.is_complete());
    }
  }
}
