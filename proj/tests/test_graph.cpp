#include <doctest.h>

#include <stdexcept>

#include "cactus/graph.hpp"

using namespace cactus;

TEST_CASE("graph construction") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}});
  CHECK(g.n_vertices() == 4);
  CHECK(g.n_edges() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(2) == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  const Graph g = Graph::cycle(7);
  for (Vertex u = 0; u < 7; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < 7; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

TEST_CASE("vertex set ordering is numeric") {
  const VertexSet a(5, {0, 2});  // 5
  const VertexSet b(5, {1, 2});  // 6
  const VertexSet c(5, {3});     // 8
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a.mask() == 5);
  CHECK(VertexSet::from_mask(5, 6) == b);
  VertexSet d(5);
  CHECK_THROWS_AS(d.insert(5), std::out_of_range);
}

TEST_CASE("closed neighborhood") {
  const Graph k3 = Graph::complete(3);
  CHECK(closed_neighborhood(k3, VertexSet(3)).empty());
  CHECK(closed_neighborhood(k3, VertexSet(3, {0})) == VertexSet(3, {0, 1, 2}));
  const Graph p3 = Graph::path(3);
  CHECK(closed_neighborhood(p3, VertexSet(3, {0})) == VertexSet(3, {0, 1}));
  CHECK_THROWS_AS(closed_neighborhood(p3, VertexSet(5, {4})), std::out_of_range);
}

TEST_CASE("independence") {
  const Graph k3 = Graph::complete(3);
  CHECK_FALSE(is_independent(k3, VertexSet(3, {0, 1})));
  CHECK(is_independent(k3, VertexSet(3, {0})));
  CHECK(is_independent(Graph::cycle(4), VertexSet(4, {0, 2})));
}

TEST_CASE("independent domination") {
  const Graph c4 = Graph::cycle(4);
  CHECK(is_independent_dominating(c4, VertexSet(4, {0, 2})));
  CHECK_FALSE(is_independent_dominating(c4, VertexSet(4, {0})));
  CHECK(is_independent_dominating(Graph::cycle(6), VertexSet(6, {0, 3})));
  CHECK_FALSE(is_independent_dominating(c4, VertexSet(4)));
}

TEST_CASE("vertex deletion relabels") {
  const Graph g = Graph::path(4).without_vertex(1);
  CHECK(g.n_vertices() == 3);
  CHECK(g.n_edges() == 1);
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("isomorphism") {
  const Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(a, Graph::cycle(4)));
  CHECK_FALSE(is_isomorphic(Graph::complete(3), Graph::path(4)));
  // Same degree sequence, different graphs: C6 versus two triangles.
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_isomorphic(Graph::cycle(6), two_triangles));
}
