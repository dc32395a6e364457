#include "critlab/certificate.hpp"

#include "critlab/error.hpp"

namespace critlab::cert {

Json edge(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges(const EdgeSet& es) {
  Json out = Json::array();
  for (const Edge& e : es) out.push_back(edge(e));
  return out;
}

Json coloring(const EdgeColoring& c) {
  Json list = Json::array();
  for (int id = 0; id < c.graph().size(); ++id) {
    const Edge& e = c.graph().edge(id);
    list.push_back(Json::array({e.u, e.v, c.color(id)}));
  }
  return Json{{"k", c.colors()}, {"edges", std::move(list)}};
}

EdgeColoring coloring_from(const Graph& g, const Json& j) {
  EdgeColoring c(g, j.at("k").get<int>());
  for (const Json& row : j.at("edges")) {
    Edge e = Edge::make(row.at(0).get<int>(), row.at(1).get<int>());
    c.set(e, row.at(2).get<int>());
  }
  if (!is_proper(c)) throw UsageError("serialized coloring is not proper");
  return c;
}

Json chain(const KempeChain& ch) {
  return Json{{"colors", Json::array({ch.i, ch.j})},
              {"kind", ch.kind == ChainKind::path ? "path" : "circuit"},
              {"vertices", ch.vertices}};
}

Json barrier(const Barrier& b) {
  return Json{{"X", b.x},
              {"components", b.components},
              {"boundary", b.boundary},
              {"q", b.q},
              {"deficiency", b.deficiency}};
}

Json properties(const BarrierProperties& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e},
              {"e_lhs_doubled", p.e_lhs2}, {"e_rhs_doubled", p.e_rhs2}};
}

Json normalized(const NormalizedBarrier& nb) {
  return Json{{"barrier", barrier(nb.barrier)},
              {"properties", properties(nb.properties)},
              {"removed", nb.removed}};
}

Json rational(const Rational& r) {
  return Json::array({r.numerator(), r.denominator()});
}

namespace {

Json verdict(Verdict v) {
  switch (v) {
    case Verdict::yes: return true;
    case Verdict::no: return false;
    case Verdict::unknown: return nullptr;
  }
  return nullptr;
}

Json triple(const Triple& t) { return Json::array({t.h, t.z, t.h2}); }

}  // namespace

Json criticality(const CriticalityReport& rep, bool with_witnesses) {
  Json per_edge = Json::array();
  for (const EdgeCriticality& ec : rep.edges) {
    Json row{{"edge", edge(ec.edge)}, {"critical", verdict(ec.critical)}, {"nodes", ec.nodes}};
    if (with_witnesses && ec.witness) row["witness"] = coloring(*ec.witness);
    per_edge.push_back(std::move(row));
  }
  return Json{{"k", rep.k},
              {"chi", rep.chi ? Json(*rep.chi) : Json(nullptr)},
              {"k_critical", verdict(rep.k_critical)},
              {"complete", rep.complete},
              {"nodes", rep.nodes},
              {"edges", std::move(per_edge)}};
}

Json lemma1_config(const Lemma1Config& cfg) {
  return Json{{"A", cfg.a}, {"x", cfg.x}, {"y", cfg.y}, {"w_list", cfg.w_list},
              {"l", cfg.l}, {"k", cfg.k}, {"edge", Json::array({cfg.w_prime, cfg.w})}};
}

Json lemma1_trace(const Lemma1Trace& tr) {
  Json m = Json::array(), m1 = Json::array(), m2 = Json::array(), claims = Json::array();
  for (const Triple& t : tr.m) m.push_back(triple(t));
  for (const auto& [i, t] : tr.m1) m1.push_back(Json{{"i", i}, {"triple", triple(t)}});
  for (const auto& e : tr.m2) {
    m2.push_back(Json{{"i", e.i}, {"j", e.j}, {"z", e.z},
                      {"first", e.first ? triple(*e.first) : Json(nullptr)}});
  }
  for (const ClaimCheck& c : tr.claims) {
    claims.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json out{{"M", m}, {"M1", m1}, {"M2", m2}, {"pair_count", tr.pair_count},
           {"bound", tr.bound}, {"count_chain", tr.count_chain},
           {"claims", claims}, {"falsified", tr.falsified()}, {"note", tr.note}};
  if (tr.aligned) {
    out["phi"] = coloring(tr.aligned->coloring);
    out["claim1"] = Json{{"original_missing", tr.aligned->original_missing},
                         {"chosen", tr.aligned->chosen},
                         {"swapped", tr.aligned->swapped}};
  }
  return out;
}

Json lemma2(const Lemma2Result& r) {
  Json violations = Json::array();
  for (const auto& cut : r.violations) {
    violations.push_back(Json::array({edge(cut[0]), edge(cut[1]), edge(cut[2])}));
  }
  return Json{{"triples", r.triples},
              {"minimal_cuts", r.minimal_cuts},
              {"critical_cuts", r.critical_cuts},
              {"complete", r.complete},
              {"violations", violations}};
}

Json audit(const AuditVerdict& v) {
  Json out{{"k", v.k},
           {"divalent_count", v.divalent_count},
           {"hypothesis_met", v.hypothesis_met},
           {"k_critical", verdict(v.criticality)},
           {"factor_search", to_string(v.factor_status)}};
  out["even_factor"] = v.even_factor ? edges(*v.even_factor) : Json(nullptr);
  if (v.factor_status == SearchStatus::unsatisfiable) {
    out["barrier_search"] = to_string(v.barrier_status);
    out["barrier"] = v.barrier ? normalized(*v.barrier) : Json(nullptr);
    Json gv = Json::array();
    for (const Rational& r : v.g_values) gv.push_back(rational(r));
    out["g_values"] = gv;
    out["g_sum"] = rational(v.g_sum);
    out["pivot_holds"] = v.pivot_holds;
    out["theorem2_consistent"] = v.theorem2_consistent;
  }
  out["proof_arithmetic_holds"] = v.arithmetic.holds;
  out["falsification"] = v.falsification;
  return out;
}

}  // namespace critlab::cert
