#include <numeric>
#include <random>

#include "doctest.h"

#include "critlab/error.hpp"
#include "critlab/families.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;
using namespace critlab::families;

namespace {

Graph two_triangles_matched() {
  std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, es);
}

}  // namespace

TEST_CASE("edges are canonical and loops are rejected") {
  CHECK(Edge::make(4, 1) == Edge{1, 4});
  CHECK_THROWS_AS(Edge::make(2, 2), UsageError);
  std::vector<Edge> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Graph(2, dup), UsageError);
  std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(Graph(3, out_of_range), UsageError);
}

TEST_CASE("degrees") {
  const Graph c5 = cycle(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(complete(4).max_degree() == 3);
  CHECK(Graph(4).max_degree() == 0);
}

TEST_CASE("adjacency is symmetric and degrees sum to 2m") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::to_graph(oracle::random_graph(rng, 1 + t % 12, 0.4));
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(u, v));
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("components") {
  CHECK(components(cycle(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  CHECK(components(complete_bipartite(2, 3), {0, 1}) == std::vector<VertexSet>{{2}, {3}, {4}});
  CHECK(components(path(4), {1}) == std::vector<VertexSet>{{0}, {2, 3}});
}

TEST_CASE("component count matches union-find on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const oracle::Plain p = oracle::random_graph(rng, 1 + t % 10, 0.25);
    const Graph g = oracle::to_graph(p);
    std::vector<char> alive(p.n, 1);
    VertexSet removed;
    for (int v = 0; v < p.n; ++v) {
      if (rng() % 4 == 0) {
        alive[v] = 0;
        removed.push_back(v);
      }
    }
    const auto comps = components(g, removed);
    CHECK(static_cast<int>(comps.size()) == oracle::count_components(p, alive));
    CHECK(is_connected(g) == (oracle::count_components(p, std::vector<char>(p.n, 1)) == 1));
    for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i - 1].front() < comps[i].front());
  }
}

TEST_CASE("boundary edges") {
  const Graph k23 = complete_bipartite(2, 3);
  CHECK(boundary_edges(k23, {0, 1}, {2, 3, 4}).size() == 6);
  const Graph c5 = cycle(5);
  CHECK(boundary_edges(c5, {0}, {2}).empty());
  CHECK(boundary_count(c5, {0, 1}, {2, 4}) == 2);
  CHECK_THROWS_AS(boundary_edges(c5, {0, 1}, {1, 2}), UsageError);
}

TEST_CASE("neighborhood and stability") {
  CHECK(neighborhood(cycle(5), {0}) == VertexSet{1, 4});
  const Graph k23 = complete_bipartite(2, 3);
  CHECK(neighborhood(k23, {0, 1}) == VertexSet{2, 3, 4});
  CHECK(neighborhood(k23, {0, 1, 2, 3, 4}).empty());
  CHECK(is_stable(k23, {2, 3, 4}));
  CHECK_FALSE(is_stable(complete(3), {0, 1}));
  CHECK(is_stable(complete(3), {}));
}

TEST_CASE("bridgeless agrees with edge-removal connectivity") {
  CHECK(is_bridgeless(cycle(5)));
  CHECK_FALSE(is_bridgeless(path(3)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const oracle::Plain p = oracle::random_graph(rng, 2 + t % 9, 0.45);
    const Graph g = oracle::to_graph(p);
    const std::vector<char> all(p.n, 1);
    const int base = oracle::count_components(p, all);
    bool expected = true;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      std::vector<char> dead(p.edges.size(), 0);
      dead[i] = 1;
      if (oracle::count_components(p, all, dead) > base) expected = false;
    }
    CHECK(is_bridgeless(g) == expected);
  }
}

TEST_CASE("minimal edge cuts") {
  const Graph g = two_triangles_matched();
  const std::vector<Edge> cut{{0, 3}, {1, 4}, {2, 5}};
  CHECK(is_minimal_edge_cut(g, cut));
  const auto sides = minimal_cut_sides(g, cut);
  REQUIRE(sides);
  CHECK(sides->first == VertexSet{0, 1, 2});
  CHECK(sides->second == VertexSet{3, 4, 5});
  const std::vector<Edge> not_cut{{0, 3}, {1, 4}};
  CHECK_FALSE(is_minimal_edge_cut(g, not_cut));
  // The three edges at a vertex plus a fourth edge disconnect but are not minimal.
  const std::vector<Edge> padded{{0, 1}, {0, 2}, {0, 3}, {4, 5}};
  CHECK_FALSE(is_minimal_edge_cut(g, padded));
}

TEST_CASE("minimal cut definition checked against all subsets") {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int t = 0; t < 150; ++t) {
    const oracle::Plain p = oracle::random_graph(rng, 4 + t % 4, 0.6);
    if (oracle::count_components(p, std::vector<char>(p.n, 1)) != 1) continue;
    const Graph g = oracle::to_graph(p);
    const int m = static_cast<int>(p.edges.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          const int idx[3] = {a, b, c};
          auto disconnects = [&](int mask) {
            std::vector<char> dead(m, 0);
            for (int s = 0; s < 3; ++s) dead[idx[s]] = mask >> s & 1;
            return oracle::count_components(p, std::vector<char>(p.n, 1), dead) > 1;
          };
          bool minimal = disconnects(7);
          for (int mask = 1; mask < 7 && minimal; ++mask) minimal = !disconnects(mask);
          const std::vector<Edge> cut{g.edge(a), g.edge(b), g.edge(c)};
          CHECK(is_minimal_edge_cut(g, cut) == minimal);
          if (minimal) {
            ++positives;
            const auto sides = minimal_cut_sides(g, cut);
            REQUIRE(sides);
            for (const Edge& e : cut) {
              const bool u_first = std::binary_search(sides->first.begin(), sides->first.end(), e.u);
              const bool v_first = std::binary_search(sides->first.begin(), sides->first.end(), e.v);
              CHECK(u_first != v_first);
            }
          }
        }
      }
    }
  }
  CHECK(positives > 0);
}

TEST_CASE("induced subgraphs relabel in ascending order") {
  const Graph p = petersen();
  const Graph h = p.induced({0, 1, 2, 5});
  CHECK(h.order() == 4);
  CHECK(h.has_edge({0, 1}));  // 0-1
  CHECK(h.has_edge({1, 2}));  // 1-2
  CHECK(h.has_edge({0, 3}));  // 0-5
  CHECK(h.size() == 3);
}

TEST_CASE("divalent count") {
  CHECK(divalent_count(subdivided_k4()) == 1);
  CHECK(divalent_count(petersen()) == 0);
  CHECK(divalent_count(cycle(7)) == 7);
}
