#include <doctest.h>

#include "dpw/graph.hpp"

using namespace dpw;

TEST_CASE("wheel shape") {
  auto w4 = wheel(4);
  CHECK(w4.vertex_count() == 5);
  CHECK(w4.edge_count() == 8);
  auto w6 = wheel(6);
  CHECK(w6.neighbors(0) == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
  CHECK(w6.neighbors(1) == std::vector<Vertex>{0, 2, 6});
  CHECK_THROWS_AS(wheel(3), std::invalid_argument);
}

TEST_CASE("wheel distances") {
  auto w6 = wheel(6);
  CHECK(distance_bfs(w6, 3, 3) == 0);
  CHECK(distance_bfs(w6, 0, 4) == 1);
  CHECK(distance_bfs(w6, 2, 5) == 2);
  CHECK(wheel_distance(7, 1, 7) == 1);
  CHECK(wheel_distance(7, 2, 7) == 2);
  CHECK(wheel_distance(7, 0, 0) == 0);
  CHECK_THROWS_AS(wheel_distance(7, 0, 8), std::invalid_argument);
  CHECK_THROWS_AS(distance_bfs(w6, 0, 7), std::invalid_argument);
}

TEST_CASE("closed form equals BFS everywhere, n = 4..9") {
  for (int n = 4; n <= 9; ++n) {
    auto w = wheel(n);
    for (Vertex u = 0; u <= n; ++u) {
      for (Vertex v = 0; v <= n; ++v) {
        CHECK_EQ(wheel_distance(n, u, v), distance_bfs(w, u, v));
      }
    }
  }
}

TEST_CASE("metric axioms on every family, exhaustive for small sizes") {
  std::vector<Graph> graphs;
  for (int n = 4; n <= 9; ++n) graphs.push_back(wheel(n));
  for (int n = 3; n <= 9; ++n) graphs.push_back(cycle(n));
  for (int n = 1; n <= 9; ++n) graphs.push_back(path(n));
  for (int n = 2; n <= 9; ++n) graphs.push_back(star(n));
  for (int n = 1; n <= 7; ++n) graphs.push_back(complete(n));
  for (const auto& g : graphs) {
    DistanceMatrix d(g);
    const auto& vs = g.vertices();
    for (Vertex u = vs.lo(); u <= vs.hi(); ++u) {
      for (Vertex v = vs.lo(); v <= vs.hi(); ++v) {
        CHECK(d.at(u, v) == d.at(v, u));
        CHECK((d.at(u, v) == 0) == (u == v));
        for (Vertex x = vs.lo(); x <= vs.hi(); ++x) {
          CHECK(d.at(u, v) <= d.at(u, x) + d.at(x, v));
        }
      }
    }
  }
}

TEST_CASE("other families") {
  CHECK(distance_bfs(cycle(5), 1, 5) == 1);
  CHECK(distance_bfs(path(4), 1, 4) == 3);
  CHECK(star(6).neighbors(0) == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(complete(4).edge_count() == 6);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(star(0), std::invalid_argument);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("graph constructor validates") {
  CHECK_THROWS_AS(Graph(Ambient::rim(3), {{1, 1}}), std::invalid_argument);          // loop
  CHECK_THROWS_AS(Graph(Ambient::rim(3), {{1, 2}, {2, 1}}), std::invalid_argument);  // dup
  CHECK_THROWS_AS(Graph(Ambient::rim(3), {{1, 2}}), std::invalid_argument);  // disconnected
}
