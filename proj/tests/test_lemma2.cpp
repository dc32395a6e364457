#include "doctest.h"

#include "critlab/error.hpp"
#include "critlab/families.hpp"
#include "critlab/lemma_lab.hpp"
#include "oracles.hpp"

using namespace critlab;
using namespace critlab::families;

namespace {

// Two copies of K2,3 with their divalent sides matched: cubic, 10 vertices.
Graph joined_k23s() {
  std::vector<Edge> es;
  for (int base : {0, 5}) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 2; b < 5; ++b) es.push_back(Edge::make(base + a, base + b));
    }
  }
  for (int b = 2; b < 5; ++b) es.push_back(Edge::make(b, b + 5));
  return Graph(10, es);
}

// Two copies of K4 joined by three disjoint edges: Δ = 4.
Graph joined_k4s() {
  std::vector<Edge> es;
  for (int base : {0, 4}) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) es.push_back({base + a, base + b});
    }
  }
  for (int i = 0; i < 3; ++i) es.push_back({i, i + 4});
  return Graph(8, es);
}

struct Tally {
  int combined = 0;
  int rejected = 0;
};

// Every pair of proper k-colorings of the two sides: combine succeeds iff
// the cut types agree, and the result is proper and extends the A side.
Tally check_combination(const Graph& g, const std::array<Edge, 3>& cut, int k) {
  const ThreeCutSplit sp = split_three_cut(g, cut);
  std::vector<EdgeColoring> as, bs;
  enumerate_colorings(sp.ga.graph, k, [&](const EdgeColoring& c) {
    as.push_back(c);
    return true;
  });
  enumerate_colorings(sp.gb.graph, k, [&](const EdgeColoring& c) {
    bs.push_back(c);
    return true;
  });
  REQUIRE_FALSE(as.empty());
  REQUIRE_FALSE(bs.empty());
  int combined = 0, rejected = 0;
  for (const EdgeColoring& a : as) {
    const auto ta = cut_type(a, sp.ga.cut[0], sp.ga.cut[1], sp.ga.cut[2]);
    for (const EdgeColoring& b : bs) {
      const auto tb = cut_type(b, sp.gb.cut[0], sp.gb.cut[1], sp.gb.cut[2]);
      const auto merged = combine_cut_colorings(g, sp, a, b);
      CHECK(merged.has_value() == (ta == tb));
      if (!merged) {
        ++rejected;
        continue;
      }
      ++combined;
      CHECK(is_proper(*merged));
      CHECK(merged->is_total());
      for (int id = 0; id < sp.ga.graph.size(); ++id) {
        const Edge& le = sp.ga.graph.edge(id);
        const Edge ge = Edge::make(sp.ga.to_global[le.u], sp.ga.to_global[le.v]);
        const bool a_side = std::binary_search(sp.side_a.begin(), sp.side_a.end(), ge.u) ||
                            std::binary_search(sp.side_a.begin(), sp.side_a.end(), ge.v);
        if (a_side) CHECK(merged->color(ge) == a.color(id));
      }
    }
  }
  CHECK(combined > 0);
  return {combined, rejected};
}

}  // namespace

TEST_CASE("cut types") {
  CHECK(cut_type(1, 1, 1) == CutColoringType::type1);
  CHECK(cut_type(1, 1, 2) == CutColoringType::type2);
  CHECK(cut_type(1, 2, 1) == CutColoringType::type3);
  CHECK(cut_type(2, 1, 1) == CutColoringType::type4);
  CHECK(cut_type(1, 2, 3) == CutColoringType::type5);
  CHECK(to_int(CutColoringType::type5) == 5);
  EdgeColoring partial(prism(), 3);
  CHECK_THROWS_AS(cut_type(partial, Edge{0, 3}, Edge{1, 4}, Edge{2, 5}), UsageError);
}

TEST_CASE("splitting a 3-cut") {
  const std::array<Edge, 3> cut{Edge{0, 3}, Edge{1, 4}, Edge{2, 5}};
  const ThreeCutSplit sp = split_three_cut(prism(), cut);
  CHECK(sp.side_a == VertexSet{0, 1, 2});
  CHECK(sp.x == std::array<Vertex, 3>{0, 1, 2});
  CHECK(sp.y == std::array<Vertex, 3>{3, 4, 5});
  CHECK(sp.ga.graph.order() == 6);
  // Induced on A and the far endpoints, so the far triangle is included.
  CHECK(sp.ga.graph.size() == 9);
  CHECK(sp.ga.to_global == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  const std::array<Edge, 3> bad{Edge{0, 1}, Edge{1, 2}, Edge{3, 4}};
  CHECK_THROWS_AS(split_three_cut(prism(), bad), UsageError);
}

TEST_CASE("combination on the prism") {
  // Every 3-coloring of a triangle side leaves the cut rainbow.
  CHECK(check_combination(prism(), {Edge{0, 3}, Edge{1, 4}, Edge{2, 5}}, 3).rejected == 0);
}

TEST_CASE("combination on two joined copies of K4") {
  const Tally t = check_combination(joined_k4s(), {Edge{0, 4}, Edge{1, 5}, Edge{2, 6}}, 4);
  CHECK(t.rejected > 0);
}

TEST_CASE("combination on a trivial cut of K3,3") {
  const Graph k33 = complete_bipartite(3, 3);
  check_combination(k33, {Edge{0, 3}, Edge{0, 4}, Edge{0, 5}}, 3);
}

TEST_CASE("combination on two joined copies of K2,3") {
  check_combination(joined_k23s(), {Edge{2, 7}, Edge{3, 8}, Edge{4, 9}}, 3);
}

TEST_CASE("type 2 against type 3 is incompatible, type 5 against type 5 combines") {
  const Graph g = prism();
  const ThreeCutSplit sp = split_three_cut(g, {Edge{0, 3}, Edge{1, 4}, Edge{2, 5}});
  std::optional<EdgeColoring> a2, b3, a5, b5;
  enumerate_colorings(sp.ga.graph, 3, [&](const EdgeColoring& c) {
    const auto t = cut_type(c, sp.ga.cut[0], sp.ga.cut[1], sp.ga.cut[2]);
    if (t == CutColoringType::type2 && !a2) a2 = c;
    if (t == CutColoringType::type5 && !a5) a5 = c;
    return true;
  });
  enumerate_colorings(sp.gb.graph, 3, [&](const EdgeColoring& c) {
    const auto t = cut_type(c, sp.gb.cut[0], sp.gb.cut[1], sp.gb.cut[2]);
    if (t == CutColoringType::type3 && !b3) b3 = c;
    if (t == CutColoringType::type5 && !b5) b5 = c;
    return true;
  });
  // Each side of the prism is a triangle with pendant edges, so the cut edges
  // always get three different colors.
  CHECK_FALSE(a2);
  CHECK_FALSE(b3);
  REQUIRE(a5);
  REQUIRE(b5);
  const auto merged = combine_cut_colorings(g, sp, *a5, *b5);
  REQUIRE(merged);
  CHECK(is_proper(*merged));

  const Graph k33 = complete_bipartite(3, 3);
  const ThreeCutSplit tk = split_three_cut(k33, {Edge{0, 3}, Edge{0, 4}, Edge{0, 5}});
  // A side is the star at 0, which forces three colors; the B side is K2,3
  // plus pendant edges, and both agree only on type 5.
  std::optional<EdgeColoring> b2;
  enumerate_colorings(tk.gb.graph, 3, [&](const EdgeColoring& c) {
    if (cut_type(c, tk.gb.cut[0], tk.gb.cut[1], tk.gb.cut[2]) == CutColoringType::type2 && !b2) b2 = c;
    return true;
  });
  std::optional<EdgeColoring> star;
  enumerate_colorings(tk.ga.graph, 3, [&](const EdgeColoring& c) {
    star = c;
    return false;
  });
  REQUIRE(star);
  if (b2) CHECK_FALSE(combine_cut_colorings(k33, tk, *star, *b2));
}

TEST_CASE("lemma 2 check preconditions and verdicts") {
  try {
    lemma2_check(petersen());
    FAIL("expected a precondition failure");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()) == "Lemma 2 requires k > 3");
  }
  CHECK_THROWS_AS(lemma2_check(complete(6)), UsageError);
  const Lemma2Result k5 = lemma2_check(complete(5));
  CHECK(k5.violations.empty());
  CHECK(k5.complete);
  CHECK(k5.minimal_cuts == 0);
}
