#include <algorithm>
#include <map>

#include "critlab/error.hpp"
#include "critlab/lemma_lab.hpp"

namespace critlab {

int to_int(CutColoringType t) { return static_cast<int>(t); }

CutColoringType cut_type(Color c1, Color c2, Color c3) {
  if (c1 == c2 && c2 == c3) return CutColoringType::type1;
  if (c1 == c2) return CutColoringType::type2;
  if (c1 == c3) return CutColoringType::type3;
  if (c2 == c3) return CutColoringType::type4;
  return CutColoringType::type5;
}

CutColoringType cut_type(const EdgeColoring& c, const Edge& e1, const Edge& e2, const Edge& e3) {
  std::array<Color, 3> col{};
  const std::array<Edge, 3> cut{e1, e2, e3};
  for (int t = 0; t < 3; ++t) {
    col[t] = c.color(Edge::make(cut[t].u, cut[t].v));
    if (col[t] == kUncolored) throw UsageError("cut edge e" + std::to_string(t + 1) + " is uncolored");
  }
  return cut_type(col[0], col[1], col[2]);
}

namespace {

CutSide make_side(const Graph& g, const VertexSet& side, const std::array<Vertex, 3>& far,
                  const std::array<Edge, 3>& cut) {
  CutSide s;
  VertexSet keep = side;
  keep.insert(keep.end(), far.begin(), far.end());
  normalize(keep);
  s.graph = g.induced(keep);
  s.to_global = keep;
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
  };
  for (int t = 0; t < 3; ++t) s.cut[t] = Edge::make(local(cut[t].u), local(cut[t].v));
  return s;
}

}  // namespace

ThreeCutSplit split_three_cut(const Graph& g, const std::array<Edge, 3>& cut) {
  ThreeCutSplit sp;
  for (int t = 0; t < 3; ++t) sp.cut[t] = Edge::make(cut[t].u, cut[t].v);
  auto sides = minimal_cut_sides(g, sp.cut);
  if (!sides) throw UsageError("edges do not form an inclusion-minimal 3-edge-cut");
  sp.side_a = sides->first;
  sp.side_b = sides->second;
  for (int t = 0; t < 3; ++t) {
    const bool u_in_a = std::binary_search(sp.side_a.begin(), sp.side_a.end(), sp.cut[t].u);
    sp.x[t] = u_in_a ? sp.cut[t].u : sp.cut[t].v;
    sp.y[t] = u_in_a ? sp.cut[t].v : sp.cut[t].u;
  }
  sp.ga = make_side(g, sp.side_a, sp.y, sp.cut);
  sp.gb = make_side(g, sp.side_b, sp.x, sp.cut);
  return sp;
}

std::optional<EdgeColoring> combine_cut_colorings(const Graph& g, const ThreeCutSplit& split,
                                                  const EdgeColoring& ga_coloring,
                                                  const EdgeColoring& gb_coloring) {
  const int k = ga_coloring.colors();
  if (gb_coloring.colors() != k) throw UsageError("side colorings use different color counts");
  if (ga_coloring.graph() != split.ga.graph || gb_coloring.graph() != split.gb.graph) {
    throw UsageError("colorings are not of G_A and G_B");
  }
  if (!ga_coloring.is_total() || !gb_coloring.is_total()) throw UsageError("side colorings must be total");
  const auto& ca = split.ga.cut;
  const auto& cb = split.gb.cut;
  if (cut_type(ga_coloring, ca[0], ca[1], ca[2]) != cut_type(gb_coloring, cb[0], cb[1], cb[2])) {
    return std::nullopt;
  }

  // Bijection on colors: cut colors of G_B onto those of G_A, the rest in order.
  std::vector<Color> sigma(k + 1, 0);
  ColorSet taken;
  for (int t = 0; t < 3; ++t) {
    const Color from = gb_coloring.color(cb[t]);
    const Color to = ga_coloring.color(ca[t]);
    sigma[from] = to;
    taken.insert(to);
  }
  Color next = 1;
  for (Color c = 1; c <= k; ++c) {
    if (sigma[c] != 0) continue;
    while (taken.contains(next)) ++next;
    sigma[c] = next;
    taken.insert(next);
  }

  std::vector<char> in_a(g.order(), 0);
  for (Vertex v : split.side_a) in_a[v] = 1;
  auto local_edge = [](const CutSide& s, const Edge& e) {
    auto pos = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(s.to_global.begin(), s.to_global.end(), v) -
                                 s.to_global.begin());
    };
    return Edge::make(pos(e.u), pos(e.v));
  };
  std::vector<Color> merged(g.size(), kUncolored);
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (in_a[e.u] || in_a[e.v]) {
      merged[id] = ga_coloring.color(local_edge(split.ga, e));
    } else {
      merged[id] = sigma[gb_coloring.color(local_edge(split.gb, e))];
    }
  }
  if (!is_proper(g, k, merged)) throw std::logic_error("combined cut coloring is not proper");
  return EdgeColoring(g, k, merged);
}

Lemma2Result lemma2_check(const Graph& g, const Lemma2Options& opts) {
  const int k = g.max_degree();
  if (k <= 3) throw UsageError("Lemma 2 requires k > 3");
  const ClassVerdict cls = opts.report ? ClassVerdict{opts.report->k, opts.report->chi, 0}
                                       : classify(g, opts.budget);
  if (!cls.chi) throw UsageError("chromatic index unknown within budget");
  if (!cls.class_two()) throw UsageError("Lemma 2 needs chi'(G) = Delta(G) + 1");

  Lemma2Result out;
  std::map<Edge, Verdict> cache;
  auto critical = [&](const Edge& e) {
    if (opts.report) {
      if (const EdgeCriticality* ec = opts.report->find(e)) return ec->critical;
    }
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Verdict v = is_critical_edge(g, e, opts.budget, cls).critical;
    cache.emplace(e, v);
    return v;
  };

  const auto& edges = g.edges();
  const int m = g.size();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        ++out.triples;
        const std::array<Edge, 3> cut{edges[a], edges[b], edges[c]};
        if (!is_minimal_edge_cut(g, cut)) continue;
        ++out.minimal_cuts;
        bool all_critical = true;
        for (const Edge& e : cut) {
          Verdict v = critical(e);
          if (v == Verdict::unknown) out.complete = false;
          all_critical &= v == Verdict::yes;
        }
        if (!all_critical) continue;
        ++out.critical_cuts;
        const bool touches_divalent = std::any_of(cut.begin(), cut.end(), [&](const Edge& e) {
          return g.degree(e.u) == 2 || g.degree(e.v) == 2;
        });
        if (touches_divalent) out.violations.push_back(cut);
      }
    }
  }
  return out;
}

}  // namespace critlab
