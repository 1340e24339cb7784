#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "corpus.hpp"
#include "pathline/generators.hpp"

using namespace pathline;

TEST_CASE("graph families") {
  CHECK(make_cycle(6).edge_count() == 6);
  CHECK(make_clique(5).edge_count() == 10);
  CHECK(make_path(7).edge_count() == 6);
  CHECK(make_star(4).vertex_count() == 5);

  Graph cat = make_caterpillar(3, 2);
  CHECK(cat.vertex_count() == 9);
  CHECK(cat.edge_count() == 8);  // a tree

  CHECK(make_complement_cycle(6).edge_count() == 9);

  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_complement_cycle(4), std::invalid_argument);
}

TEST_CASE("seeded random generation is reproducible") {
  Graph a = random_connected(8, 0.4, 17);
  Graph b = random_connected(8, 0.4, 17);
  CHECK(a == b);
  Graph c = random_connected(8, 0.4, 18);
  CHECK(a.vertex_count() == c.vertex_count());

  CHECK(random_permutation_model(10, 3) == random_permutation_model(10, 3));

  SUBCASE("hopeless specs error out instead of spinning") {
    CHECK_THROWS_AS(random_connected(24, 0.01, 5), std::invalid_argument);
  }
}

TEST_CASE("edge-list parsing and serialization") {
  Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == make_clique(3));
  CHECK(parse_graph("2 1\n0 1\n") == make_clique(2));

  CHECK_THROWS_AS(parse_graph("4 2\n0 1\n2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("x y\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), std::invalid_argument);

  SUBCASE("comments and blank lines are skipped") {
    Graph g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n");
    CHECK(g == make_clique(3));
  }
  SUBCASE("round trip") {
    for (int i = 0; i < 20; ++i) {
      Graph g = random_connected(7, 0.45, 1300 + i);
      CHECK(parse_graph(serialize_graph(g)) == g);
    }
  }
}

TEST_CASE("model parsing") {
  std::istringstream perm("3 4 1 2\n");
  CHECK(parse_permutation_model(perm) == std::vector<int>{3, 4, 1, 2});

  std::istringstream traps("1 3 1 3\n2 5 2 5\n");
  auto model = parse_trapezoid_model(traps);
  CHECK(model.size() == 2);
  CHECK(model[1].upper_lo == 2);

  std::istringstream cb("2 2\n1 2\n2 2\n");
  auto [q, intervals] = parse_convex_bipartite_model(cb);
  CHECK(q == 2);
  CHECK(intervals == std::vector<std::pair<int, int>>{{1, 2}, {2, 2}});

  std::istringstream bad("1 3 1\n");
  CHECK_THROWS_AS(parse_trapezoid_model(bad), std::invalid_argument);
  std::istringstream inverted("3 1 1 3\n");
  CHECK_THROWS_AS(parse_trapezoid_model(inverted), std::invalid_argument);
}
