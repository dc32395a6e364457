#include "doctest.h"

#include "critlab/criticality.hpp"
#include "critlab/error.hpp"
#include "critlab/families.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;
using namespace critlab::families;

TEST_CASE("single edges") {
  const Graph c5 = cycle(5);
  for (const Edge& e : c5.edges()) {
    const EdgeCriticality ec = is_critical_edge(c5, e);
    CHECK(ec.critical == Verdict::yes);
    REQUIRE(ec.witness);
    CHECK(ec.witness->colors() == 2);
    CHECK(is_proper(*ec.witness));
    CHECK(ec.witness->is_total());
  }
  const Graph k4 = complete(4);
  for (const Edge& e : k4.edges()) CHECK(is_critical_edge(k4, e).critical == Verdict::no);
  // Petersen minus an edge contains Petersen minus a vertex, which is class 2.
  const Graph p = petersen();
  const oracle::Plain pp = oracle::from(p);
  for (int id = 0; id < p.size(); ++id) {
    CHECK(is_critical_edge(p, p.edge(id)).critical == Verdict::no);
    CHECK(oracle::chromatic_index(oracle::without_edge(pp, id)) == 4);
  }
  const Graph pv = p.induced({1, 2, 3, 4, 5, 6, 7, 8, 9});
  for (const Edge& e : pv.edges()) CHECK(is_critical_edge(pv, e).critical == Verdict::yes);
}

TEST_CASE("whole-graph verdicts") {
  for (int t = 1; t <= 4; ++t) CHECK(is_k_critical(cycle(2 * t + 1)).k_critical == Verdict::yes);
  const CriticalityReport sk4 = is_k_critical(subdivided_k4());
  CHECK(sk4.k == 3);
  CHECK(sk4.chi == 4);
  CHECK(sk4.k_critical == Verdict::yes);
  CHECK(is_k_critical(petersen()).k_critical == Verdict::no);
  const CriticalityReport pv = is_k_critical(petersen().induced({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(pv.k == 3);
  CHECK(pv.k_critical == Verdict::yes);
  CHECK(is_k_critical(cycle(6)).k_critical == Verdict::no);
  CHECK(is_k_critical(complete(4)).k_critical == Verdict::no);
  CHECK_THROWS_AS(is_k_critical(Graph(3)), UsageError);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(is_k_critical(Graph(4, two)), UsageError);
}

TEST_CASE("a small budget yields unknown") {
  CriticalityOptions opts;
  opts.budget = 3;
  const CriticalityReport r = is_k_critical(petersen(), opts);
  CHECK(r.k_critical == Verdict::unknown);
}

TEST_CASE("threads do not change the report") {
  for (const Graph& g : {petersen(), subdivided_k4(), complete(5), cycle(9)}) {
    CriticalityOptions one, four;
    four.threads = 4;
    const CriticalityReport a = is_k_critical(g, one);
    const CriticalityReport b = is_k_critical(g, four);
    CHECK(a.k_critical == b.k_critical);
    CHECK(a.nodes == b.nodes);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      CHECK(a.edges[i].critical == b.edges[i].critical);
      CHECK(a.edges[i].witness == b.edges[i].witness);
    }
  }
}

TEST_CASE("criticality matches brute force on connected graphs up to 6 vertices") {
  int critical = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/connected_le7.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() > 6 || g.size() == 0) continue;
    const oracle::Plain p = oracle::from(g);
    const CriticalityReport r = is_k_critical(g);
    REQUIRE(r.k_critical != Verdict::unknown);
    const bool expected = oracle::k_critical(p);
    CHECK_MESSAGE((r.k_critical == Verdict::yes) == expected, line);
    if (!expected) continue;
    ++critical;
    CHECK(g.min_degree() >= 2);
    CHECK(is_bridgeless(g));
  }
  CHECK(critical > 0);
}

TEST_CASE("certified critical graphs have no leaves and no bridges") {
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/connected_le7.g6")) {
    const Graph g = parse_graph6(line);
    if (g.size() == 0) continue;
    CriticalityOptions opts;
    opts.stop_at_first_noncritical = true;
    if (is_k_critical(g, opts).k_critical != Verdict::yes) continue;
    CHECK(g.min_degree() >= 2);
    CHECK(is_bridgeless(g));
  }
}

TEST_CASE("class 2 graphs contain a critical subgraph") {
  int extracted = 0;
  for (const std::string& line : oracle::read_lines(CRITLAB_FIXTURES "/all_le8.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() > 6 || g.size() == 0) continue;
    const ClassVerdict cls = classify(g);
    if (!cls.class_two()) continue;
    const std::optional<Graph> h = critical_subgraph(g);
    REQUIRE(h);
    CHECK(h->max_degree() == g.max_degree());
    const oracle::Plain ph = oracle::from(*h);
    CHECK_MESSAGE(oracle::k_critical(ph), line);
    CHECK(h->min_degree() >= 1);
    ++extracted;
  }
  CHECK(extracted > 0);
}
