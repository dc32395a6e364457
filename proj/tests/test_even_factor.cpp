#include <random>

#include "doctest.h"

#include "critlab/error.hpp"
#include "critlab/even_factor.hpp"
#include "critlab/families.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;
using namespace critlab::families;

namespace {

Graph two_triangles() {
  std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  return Graph(6, es);
}

std::vector<char> member_flags(int n, const VertexSet& x) {
  std::vector<char> f(n, 0);
  for (Vertex v : x) f[v] = 1;
  return f;
}

}  // namespace

TEST_CASE("even factor predicate") {
  const Graph c5 = cycle(5);
  CHECK(is_even_factor(c5, c5.edges()));
  EdgeSet minus(c5.edges().begin() + 1, c5.edges().end());
  CHECK_FALSE(is_even_factor(c5, minus));
  const Graph tt = two_triangles();
  CHECK(is_even_factor(tt, tt.edges()));
}

TEST_CASE("even factor search") {
  const EvenFactorResult c5 = find_even_factor(cycle(5));
  REQUIRE(c5.status == SearchStatus::found);
  CHECK(c5.factor->size() == 5);
  const EvenFactorResult p = find_even_factor(petersen());
  REQUIRE(p.status == SearchStatus::found);
  CHECK(is_even_factor(petersen(), *p.factor));
  CHECK(find_even_factor(complete_bipartite(2, 3)).status == SearchStatus::unsatisfiable);
  CHECK(find_even_factor(star(3)).status == SearchStatus::unsatisfiable);
  CHECK(find_even_factor(Graph(1)).status == SearchStatus::unsatisfiable);
}

TEST_CASE("even factor search matches subset enumeration") {
  int with = 0, without = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/all_le8.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() > 7 || g.size() > 13) continue;
    const EvenFactorResult r = find_even_factor(g);
    REQUIRE(r.status != SearchStatus::budget_exceeded);
    const bool expected = oracle::has_even_factor(oracle::from(g));
    CHECK_MESSAGE((r.status == SearchStatus::found) == expected, line);
    if (r.factor) CHECK(is_even_factor(g, *r.factor));
    (expected ? with : without)++;
  }
  CHECK(with > 0);
  CHECK(without > 0);
}

TEST_CASE("deficiency values") {
  const Barrier k23 = deficiency(complete_bipartite(2, 3), {2, 3, 4});
  CHECK(k23.deficiency == -2);
  CHECK(k23.q == 2);
  CHECK(k23.components == std::vector<VertexSet>{{0}, {1}});
  const Barrier k13 = deficiency(star(3), {0});
  CHECK(k13.deficiency == -2);
  CHECK(k13.q == 3);
  const Barrier c5 = deficiency(cycle(5), {});
  CHECK(c5.deficiency == 0);
  CHECK(c5.q == 0);
  CHECK_THROWS_AS(deficiency(cycle(5), {0, 1, 2, 3, 4}), UsageError);
}

TEST_CASE("deficiency matches the oracle on random sets") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const oracle::Plain p = oracle::random_graph(rng, 2 + t % 10, 0.4);
    const Graph g = oracle::to_graph(p);
    VertexSet x;
    for (Vertex v = 0; v < p.n; ++v) {
      if (rng() % 3 == 0) x.push_back(v);
    }
    if (static_cast<int>(x.size()) == p.n) x.pop_back();
    const Barrier b = deficiency(g, x);
    const oracle::Deficiency d = oracle::deficiency(p, member_flags(p.n, x));
    CHECK(b.deficiency == d.value);
    CHECK(b.q == d.q);
    CHECK(b.boundary == d.boundary);
  }
}

TEST_CASE("barrier search") {
  const BarrierResult k23 = find_barrier(complete_bipartite(2, 3));
  REQUIRE(k23.status == SearchStatus::found);
  CHECK(k23.barrier->x == VertexSet{2, 3, 4});
  CHECK(k23.barrier->deficiency == -2);
  CHECK(find_barrier(cycle(5)).status == SearchStatus::unsatisfiable);
  const BarrierResult k13 = find_barrier(star(3));
  REQUIRE(k13.barrier);
  CHECK(k13.barrier->x == VertexSet{0});
  CHECK(find_barrier(petersen(), 10).status == SearchStatus::budget_exceeded);
}

TEST_CASE("barrier search returns a minimum barrier, serial and parallel alike") {
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/all_le8.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() > 7) continue;
    const BarrierResult s = find_barrier(g);
    const int expected = oracle::min_barrier_size(oracle::from(g));
    if (expected < 0) {
      CHECK(s.status == SearchStatus::unsatisfiable);
    } else {
      REQUIRE(s.barrier);
      CHECK(static_cast<int>(s.barrier->x.size()) == expected);
      CHECK(oracle::deficiency(oracle::from(g), member_flags(g.order(), s.barrier->x)).value < 0);
    }
    for (int threads : {2, 3}) {
      const BarrierResult p = find_barrier_parallel(g, kDefaultBarrierBudget, threads);
      CHECK(p.status == s.status);
      CHECK(p.subsets == s.subsets);
      if (s.barrier) {
        REQUIRE(p.barrier);
        CHECK(p.barrier->x == s.barrier->x);
      }
    }
  }
}

TEST_CASE("parallel barrier search honors the same budget") {
  const Graph p = petersen();
  for (std::uint64_t budget : {1ULL, 10ULL, 200ULL, 1000ULL}) {
    const BarrierResult s = find_barrier(p, budget);
    const BarrierResult q = find_barrier_parallel(p, budget, 4);
    CHECK(s.status == q.status);
    CHECK(s.subsets == q.subsets);
  }
}

TEST_CASE("property checks") {
  const BarrierProperties k23 = check_properties(complete_bipartite(2, 3), {2, 3, 4});
  CHECK(k23.all());
  CHECK(k23.e_lhs2 == 0);
  CHECK(k23.e_rhs2 == 6);
  const BarrierProperties k13 = check_properties(star(3), {0});
  CHECK(k13.all());
  CHECK(k13.e_lhs2 == -6);
  const BarrierProperties c5 = check_properties(cycle(5), {0});
  CHECK_FALSE(c5.a);
  CHECK_FALSE(check_properties(complete(4), {0, 1}).c);
}

TEST_CASE("normalization") {
  const NormalizedBarrier k13 = normalize_barrier(star(3), {0});
  CHECK(k13.barrier.x == VertexSet{0});
  CHECK(k13.removed.empty());
  CHECK(k13.properties.all());
  const NormalizedBarrier k23 = normalize_barrier(complete_bipartite(2, 3), {2, 3, 4});
  CHECK(k23.barrier.x == VertexSet{2, 3, 4});
  CHECK(k23.properties.all());
  // K1,3 with a pendant path 1-4-5: {0, 4} is a barrier, 4 can go.
  std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}};
  const Graph g(6, es);
  REQUIRE(deficiency(g, {0, 4}).is_barrier());
  const NormalizedBarrier n = normalize_barrier(g, {0, 4});
  CHECK(n.barrier.x.size() == 1);
  CHECK(n.removed.size() == 1);
  CHECK(n.properties.all());
  CHECK_THROWS_AS(normalize_barrier(cycle(5), {0}), UsageError);
  CHECK_THROWS_AS(normalize_barrier(two_triangles(), {0}), UsageError);
}

TEST_CASE("normalized barriers satisfy every property on factorless graphs") {
  int count = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/connected_le7.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() < 2 || find_even_factor(g).status != SearchStatus::unsatisfiable) continue;
    const BarrierResult b = find_barrier(g);
    REQUIRE(b.barrier);
    const NormalizedBarrier n = normalize_barrier(g, b.barrier->x);
    CHECK_MESSAGE(n.properties.all(), line);
    const oracle::Plain p = oracle::from(g);
    const std::vector<char> in_x = member_flags(g.order(), n.barrier.x);
    CHECK(oracle::deficiency(p, in_x).value < 0);
    for (Vertex u : n.barrier.x) {
      for (Vertex v : n.barrier.x) CHECK_FALSE(p.adj[u][v]);
    }
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("(a) and (e) agree whenever (c) and (d) hold") {
  std::mt19937_64 rng(37);
  int exercised = 0;
  for (int t = 0; t < 20000 && exercised < 2000; ++t) {
    const oracle::Plain p = oracle::random_graph(rng, 3 + t % 10, 0.2 + 0.5 * (t % 7) / 7.0);
    const Graph g = oracle::to_graph(p);
    VertexSet x;
    for (Vertex v = 0; v < p.n; ++v) {
      if (rng() % 3 == 0) x.push_back(v);
    }
    if (static_cast<int>(x.size()) == p.n) continue;
    const BarrierProperties props = check_properties(g, x);
    if (!props.c || !props.d) continue;
    CHECK(props.a == props.e);
    ++exercised;
  }
  CHECK(exercised > 500);
}

TEST_CASE("bridgeless graphs of minimum degree three have even factors") {
  int count = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/all_le8.g6")) {
    const Graph g = parse_graph6(line);
    if (g.min_degree() < 3 || !is_bridgeless(g)) continue;
    const EvenFactorResult r = find_even_factor(g);
    CHECK_MESSAGE(r.status == SearchStatus::found, line);
    if (r.factor) CHECK(is_even_factor(g, *r.factor));
    ++count;
  }
  CHECK(count > 0);
}
