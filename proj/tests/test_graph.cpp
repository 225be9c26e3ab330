#include <doctest.h>

#include "tough/error.hpp"
#include "tough/generators.hpp"
#include "tough/graph.hpp"
#include "tough/graph6.hpp"

using namespace tough;

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("components after removing a set") {
  Graph p5 = make_path(5);
  CHECK(count_components(p5, 0) == 1);
  CHECK(count_components(p5, bit(2)) == 2);
  CHECK(count_components(p5, bit(1) | bit(3)) == 3);
  CHECK(count_components(p5, p5.vertex_mask()) == 0);
  CHECK(is_connected(p5));
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST_CASE("bridges") {
  Graph net = make_net();
  CHECK(is_bridge(net, {0, 3}));
  CHECK_FALSE(is_bridge(net, {0, 1}));
  CHECK_THROWS_AS(is_bridge(net, {3, 4}), Error);
}

TEST_CASE("graph6 round trips the fixture encodings") {
  CHECK(write_graph6(make_cycle(4)) == "Cl");
  CHECK(write_graph6(make_cycle(5)) == "Dhc");
  CHECK(write_graph6(make_star(3)) == "Cs");
  CHECK(write_graph6(make_path(3)) == "Bg");
  CHECK(write_graph6(make_path(5)) == "DhC");
  CHECK(write_graph6(make_net()) == "E{O_");
  CHECK(write_graph6(make_petersen()) == "IheA@GUAo");
  CHECK(write_graph6(make_complete(4)) == "C~");
  Graph cr = parse_graph6("Cr");
  CHECK(cr == Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(parse_graph6(">>graph6<<Cl\r\n") == make_cycle(4));
}

TEST_CASE("graph6 errors name the offending byte") {
  CHECK_THROWS_WITH_AS(parse_graph6("C"), doctest::Contains("length"), Error);
  CHECK_THROWS_WITH_AS(parse_graph6("C\x01"), doctest::Contains("at byte 1"), Error);
  CHECK_THROWS_AS(parse_graph6("Bo_"), Error);  // trailing byte
  CHECK_THROWS_AS(parse_graph6("Bh"), Error);   // nonzero padding
}

TEST_CASE("graph6 round trips random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 40), 0.3, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}
