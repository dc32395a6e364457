#include "critlab/criticality.hpp"

#include <omp.h>

#include "critlab/error.hpp"

namespace critlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

const EdgeCriticality* CriticalityReport::find(const Edge& e) const {
  for (const EdgeCriticality& ec : edges) {
    if (ec.edge == e) return &ec;
  }
  return nullptr;
}

ClassVerdict classify(const Graph& g, std::uint64_t budget) {
  ChromaticIndex ci = chromatic_index(g, budget);
  return {g.max_degree(), ci.value, ci.nodes};
}

EdgeCriticality is_critical_edge(const Graph& g, const Edge& e, std::uint64_t budget,
                                 const std::optional<ClassVerdict>& cls) {
  EdgeCriticality out;
  out.edge = Edge::make(e.u, e.v);
  if (!g.has_edge(out.edge)) throw UsageError("edge is not in the graph");
  ClassVerdict c = cls ? *cls : classify(g, budget);
  if (!cls) out.nodes += c.nodes;
  if (!c.chi) return out;
  if (!c.class_two()) {
    out.critical = Verdict::no;
    return out;
  }
  ColorSearchResult r = color_minus_edge(g, out.edge, c.delta, budget);
  out.nodes += r.nodes;
  switch (r.status) {
    case SearchStatus::found:
      out.critical = Verdict::yes;
      out.witness = std::move(r.coloring);
      break;
    case SearchStatus::unsatisfiable: out.critical = Verdict::no; break;
    case SearchStatus::budget_exceeded: out.critical = Verdict::unknown; break;
  }
  return out;
}

CriticalityReport is_k_critical(const Graph& g, const CriticalityOptions& opts) {
  if (g.size() == 0) throw UsageError("criticality needs at least one edge");
  if (!is_connected(g)) throw UsageError("criticality needs a connected graph");
  CriticalityReport rep;
  rep.graph_id = opts.graph_id;
  const ClassVerdict cls = classify(g, opts.budget);
  rep.k = cls.delta;
  rep.chi = cls.chi;
  rep.nodes = cls.nodes;
  if (!cls.chi) {
    rep.k_critical = Verdict::unknown;
    rep.complete = false;
    return rep;
  }
  if (!cls.class_two()) {
    // Class 1: no edge can be critical; skip the per-edge searches.
    for (const Edge& e : g.edges()) rep.edges.push_back({e, Verdict::no, std::nullopt, 0});
    rep.k_critical = Verdict::no;
    return rep;
  }

  const int m = g.size();
  if (opts.threads <= 1 || opts.stop_at_first_noncritical) {
    for (const Edge& e : g.edges()) {
      rep.edges.push_back(is_critical_edge(g, e, opts.budget, cls));
      if (opts.stop_at_first_noncritical && rep.edges.back().critical == Verdict::no) break;
    }
  } else {
    std::vector<EdgeCriticality> results(m);
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
    for (int id = 0; id < m; ++id) results[id] = is_critical_edge(g, g.edge(id), opts.budget, cls);
    rep.edges = std::move(results);
  }

  bool any_unknown = false, any_no = false;
  for (const EdgeCriticality& ec : rep.edges) {
    rep.nodes += ec.nodes;
    any_no |= ec.critical == Verdict::no;
    any_unknown |= ec.critical == Verdict::unknown;
  }
  rep.complete = static_cast<int>(rep.edges.size()) == m;
  rep.k_critical = any_no ? Verdict::no : any_unknown ? Verdict::unknown : Verdict::yes;
  return rep;
}

std::optional<Graph> critical_subgraph(const Graph& g, std::uint64_t budget) {
  ClassVerdict cls = classify(g, budget);
  if (!cls.chi) return std::nullopt;
  if (!cls.class_two()) throw UsageError("critical_subgraph needs a class 2 graph");
  Graph h = g;
  for (bool removed = true; removed;) {
    removed = false;
    // Deleting a non-critical edge keeps χ' = Δ+1 and hence Δ itself.
    const ClassVerdict hc{cls.delta, cls.delta + 1, 0};
    for (const Edge& e : h.edges()) {
      EdgeCriticality ec = is_critical_edge(h, e, budget, hc);
      if (ec.critical == Verdict::unknown) return std::nullopt;
      if (ec.critical == Verdict::no) {
        h = h.without_edge(e);
        removed = true;
        break;
      }
    }
  }
  VertexSet keep;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) keep.push_back(v);
  }
  return h.induced(keep);
}

}  // namespace critlab
