#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "critlab/error.hpp"
#include "critlab/lemma_lab.hpp"

namespace critlab {

namespace {

std::string vertex_name(Vertex v) { return std::to_string(v); }

// Verdict cache for the critical-edge requirement.
class CriticalEdges {
 public:
  CriticalEdges(const Graph& g, const ClassVerdict& cls, const Lemma1SearchOptions& opts)
      : g_(g), cls_(cls), opts_(opts) {}

  Verdict operator()(const Edge& e) {
    if (opts_.report) {
      if (const EdgeCriticality* ec = opts_.report->find(e)) return ec->critical;
    }
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    Verdict v = is_critical_edge(g_, e, opts_.color_budget, cls_).critical;
    cache_.emplace(e, v);
    return v;
  }

 private:
  const Graph& g_;
  ClassVerdict cls_;
  const Lemma1SearchOptions& opts_;
  std::map<Edge, Verdict> cache_;
};

VertexSet to_set(std::uint64_t mask) {
  VertexSet s;
  for (; mask != 0; mask &= mask - 1) s.push_back(std::countr_zero(mask));
  return s;
}

}  // namespace

long long lemma1_bound(int k, int dx, int dy) {
  return static_cast<long long>(k) * (k - dy) - dx + 1;
}

bool lemma1_bound_holds(int k, int dx, int dy, int l) { return l > lemma1_bound(k, dx, dy); }

void validate_lemma1_config(const Graph& g, const Lemma1Config& cfg) {
  auto fail = [](const std::string& what) { throw HypothesisError("Lemma 1 hypothesis violated: " + what); };
  for (Vertex v : cfg.a) {
    if (!g.valid_vertex(v)) fail("A contains an invalid vertex");
  }
  if (cfg.a.empty()) fail("A is empty");
  if (cfg.k != g.max_degree()) fail("k differs from the maximum degree");
  VertexSet a = cfg.a;
  normalize(a);
  const VertexSet nbhd = neighborhood(g, a);
  for (Vertex v : nbhd) {
    if (boundary_count(g, a, {v}) != 1) fail("e_G(A, " + vertex_name(v) + ") != 1");
  }
  VertexSet expected = cfg.w_list;
  expected.push_back(cfg.x);
  expected.push_back(cfg.y);
  normalize(expected);
  if (expected != nbhd || expected.size() != cfg.w_list.size() + 2) fail("N(A) != {x, y, w_1..w_l}");
  if (cfg.l != static_cast<int>(cfg.w_list.size()) || cfg.l < 1) fail("l must equal |w_list| >= 1");
  if (!(g.degree(cfg.y) <= g.degree(cfg.x) && g.degree(cfg.x) < cfg.k)) fail("d(y) <= d(x) < k");
  for (Vertex w : cfg.w_list) {
    if (g.degree(w) != 2) fail("w = " + vertex_name(w) + " is not divalent");
  }
  if (!std::binary_search(a.begin(), a.end(), cfg.w_prime) ||
      std::find(cfg.w_list.begin(), cfg.w_list.end(), cfg.w) == cfg.w_list.end() ||
      !g.adjacent(cfg.w_prime, cfg.w)) {
    fail("w'w must join A to a divalent neighbour");
  }
}

bool lemma1_bound_check(const Graph& g, const Lemma1Config& cfg) {
  validate_lemma1_config(g, cfg);
  return lemma1_bound_holds(cfg.k, g.degree(cfg.x), g.degree(cfg.y), cfg.l);
}

Lemma1Search find_lemma1_configs(const Graph& g, const Lemma1SearchOptions& opts) {
  const int n = g.order();
  const int k = g.max_degree();
  if (k < 3) throw UsageError("Lemma 1 search needs maximum degree >= 3 (d(y) <= d(x) < k)");
  if (n > Graph::kMaskLimit) throw UsageError("Lemma 1 search supports n <= 64");
  const ClassVerdict cls = opts.report ? ClassVerdict{opts.report->k, opts.report->chi, 0}
                                       : classify(g, opts.color_budget);
  if (!cls.chi) throw UsageError("chromatic index unknown within budget");
  if (!cls.class_two()) throw UsageError("Lemma 1 needs chi'(G) = Delta(G) + 1");

  Lemma1Search out;
  out.size_cap = opts.size_cap < 0 ? std::max(0, n - 3) : opts.size_cap;
  CriticalEdges critical(g, cls, opts);
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.adjacency_mask(v);

  auto consider = [&](std::uint64_t amask) {
    const VertexSet a = to_set(amask);
    std::uint64_t nmask = 0;
    for (Vertex v : a) nmask |= adj[v];
    nmask &= ~amask;
    const VertexSet nbhd = to_set(nmask);
    if (nbhd.size() < 3) return;
    for (Vertex v : nbhd) {
      if (std::popcount(adj[v] & amask) != 1) return;
    }
    VertexSet other, divalent;
    for (Vertex v : nbhd) (g.degree(v) == 2 ? divalent : other).push_back(v);
    if (other.size() > 2) return;
    // x takes the larger degree (smaller index on ties); spare roles go to
    // the smallest-index divalent neighbours.
    std::sort(other.begin(), other.end(), [&](Vertex p, Vertex q) {
      return g.degree(p) != g.degree(q) ? g.degree(p) > g.degree(q) : p < q;
    });
    std::vector<Vertex> roles = other;
    std::size_t spare = 0;
    while (roles.size() < 2) roles.push_back(divalent[spare++]);
    std::sort(roles.begin(), roles.end(), [&](Vertex p, Vertex q) {
      return g.degree(p) != g.degree(q) ? g.degree(p) > g.degree(q) : p < q;
    });
    const Vertex x = roles[0], y = roles[1];
    if (!(g.degree(y) <= g.degree(x) && g.degree(x) < k)) return;
    VertexSet ws;
    for (Vertex v : nbhd) {
      if (v != x && v != y) ws.push_back(v);
    }
    for (Vertex w : ws) {
      const Vertex wp = std::countr_zero(adj[w] & amask);
      if (critical(Edge::make(wp, w)) != Verdict::yes) continue;
      out.configs.push_back({a, x, y, ws, static_cast<int>(ws.size()), k, wp, w});
    }
  };

  // Every nonempty A by size, then in increasing mask order (Gosper's hack).
  for (int size = 1; size <= std::min(out.size_cap, n) && out.complete; ++size) {
    const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
    for (std::uint64_t sub = (std::uint64_t{1} << size) - 1; sub != 0 && (limit == 0 || sub < limit);) {
      if (++out.subsets > opts.subset_budget) {
        out.complete = false;
        break;
      }
      consider(sub);
      const std::uint64_t c = sub & -sub;
      const std::uint64_t r = sub + c;
      if (r == 0) break;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  return out;
}

std::vector<Triple> triples_on_chain(const Graph& g, const Lemma1Config& cfg,
                                     const EdgeColoring& c, const KempeChain& chain) {
  std::vector<char> in_a(g.order(), 0);
  for (Vertex v : cfg.a) in_a[v] = 1;
  std::vector<Triple> out;
  const std::size_t len = chain.vertices.size();
  const bool closed = chain.kind == ChainKind::circuit;
  for (std::size_t t = 0; t < len; ++t) {
    if (closed && t + 1 == len) break;  // repeated start vertex
    const bool interior = closed || (t > 0 && t + 1 < len);
    if (!interior) continue;
    const Vertex z = chain.vertices[t];
    if (in_a[z] || z == cfg.w) continue;
    std::optional<int> to_a;
    for (const Incidence& in : c.graph().incident(z)) {
      if (in_a[in.neighbor]) to_a = in.edge;
    }
    if (!to_a) continue;  // z not in N(A)
    const Color h = c.color(*to_a);
    if (h != chain.i && h != chain.j) continue;
    out.push_back({h, z, h == chain.i ? chain.j : chain.i});
  }
  return out;
}

bool Lemma1Trace::falsified() const {
  return std::any_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return !c.passed; });
}

Lemma1Trace lemma1_trace(const Graph& g, const Lemma1Config& cfg, std::uint64_t budget) {
  validate_lemma1_config(g, cfg);
  ColorSearchResult r = color_minus_edge(g, Edge::make(cfg.w_prime, cfg.w), cfg.k, budget);
  if (r.status != SearchStatus::found) {
    throw HypothesisError(std::string("no proper k-coloring of G - w'w: ") + to_string(r.status));
  }
  return lemma1_trace(g, cfg, *r.coloring);
}

Lemma1Trace lemma1_trace(const Graph& g, const Lemma1Config& cfg, const EdgeColoring& minus_edge) {
  validate_lemma1_config(g, cfg);
  const int k = cfg.k;
  const int dx = g.degree(cfg.x);
  const int dy = g.degree(cfg.y);
  if (minus_edge.colors() != k || minus_edge.graph() != g.without_edge(Edge::make(cfg.w_prime, cfg.w))) {
    throw UsageError("coloring must be a k-coloring of G - w'w");
  }
  Lemma1Trace tr;
  tr.note = "statement bound is strict (l > bound); the closing line of the argument reads l >= bound";
  auto claim = [&](std::string name, bool ok, std::string detail = {}) {
    tr.claims.push_back({std::move(name), ok, std::move(detail)});
  };

  tr.aligned = align_missing(minus_edge, cfg.w_prime, cfg.w, cfg.x);
  const EdgeColoring& phi = tr.aligned->coloring;
  claim("claim1_alignment",
        phi.missing(cfg.w_prime) == ColorSet::from_bits(2) && phi.present(cfg.w) == ColorSet::from_bits(2) &&
            phi.missing(cfg.x).contains(1));

  // M
  std::vector<char> in_a(g.order(), 0);
  for (Vertex v : cfg.a) in_a[v] = 1;
  for (Vertex z : neighborhood(g, cfg.a)) {
    if (z == cfg.w) continue;
    Color h = 0;
    for (const Incidence& in : phi.graph().incident(z)) {
      if (in_a[in.neighbor]) h = phi.color(in.edge);
    }
    for (Color h2 : phi.present(z).to_vector()) {
      if (h2 != h) tr.m.push_back({h, z, h2});
    }
  }
  std::sort(tr.m.begin(), tr.m.end());
  const std::set<Triple> m_set(tr.m.begin(), tr.m.end());

  // M1: last triple on P_{w'}(1, i) read from w'.
  bool chains_ok = true, colors_ok = true, avoids_x = true, m1_exists = true;
  for (Color i = 2; i <= k; ++i) {
    // 1 is missing at w', so w' ends the chain.
    const KempeChain p = kempe_chain(phi, cfg.w_prime, 1, i, cfg.w_prime);
    if (p.back() != cfg.w) chains_ok = false;
    std::vector<Triple> on = triples_on_chain(g, cfg, phi, p);
    if (on.empty()) {
      m1_exists = false;
      continue;
    }
    const Triple last = on.back();
    tr.m1.push_back({i, last});
    if (std::set<Color>{last.h, last.h2} != std::set<Color>{1, i}) colors_ok = false;
    if (last.z == cfg.x) avoids_x = false;
  }
  claim("critical_path_w'w", chains_ok, "every P_{w'}(1,i) is a w',w-path");
  claim("m1_nonempty_chains", m1_exists, "every P_{w'}(1,i) contains a triple of M");
  std::set<Triple> m1_set;
  for (const auto& [i, t] : tr.m1) m1_set.insert(t);
  tr.m1_distinct = static_cast<int>(m1_set.size());
  claim("claim2_m1_size", tr.m1_distinct == k - 1,
        "|M1| = " + std::to_string(tr.m1_distinct) + ", k-1 = " + std::to_string(k - 1));
  claim("m1_color_pairs", colors_ok, "{i1,i2} = {1,i}");
  claim("m1_avoids_x", avoids_x);

  // M2: first triple on P_{z_i}(i_1, j) read from z_i, for j missing at z_i.
  std::set<std::pair<Color, Vertex>> pairs;
  std::set<Triple> m2_set;
  bool claim3 = true;
  for (const auto& [i, t] : tr.m1) {
    const Vertex z = t.z;
    for (Color j : phi.missing(z).to_vector()) {
      pairs.insert({j, z});
      KempeChain p = kempe_chain(phi, z, t.h, j, z);
      std::vector<Triple> on = triples_on_chain(g, cfg, phi, p);
      Lemma1Trace::M2Entry entry{i, j, z, std::nullopt};
      if (on.empty()) {
        claim3 = false;
      } else {
        entry.first = on.front();
        m2_set.insert(on.front());
      }
      tr.m2.push_back(entry);
    }
  }
  tr.pair_count = static_cast<int>(pairs.size());
  tr.m2_distinct = static_cast<int>(m2_set.size());
  claim("claim3_chain_has_triple", claim3);
  bool disjoint = std::none_of(m1_set.begin(), m1_set.end(), [&](const Triple& t) { return m2_set.count(t) > 0; });
  claim("claim4_disjoint", disjoint);
  claim("claim5_m2_size", tr.m2_distinct == tr.pair_count,
        "|M2| = " + std::to_string(tr.m2_distinct) + ", pairs = " + std::to_string(tr.pair_count));
  const long long claim6_bound = static_cast<long long>(k - dy) * (k - 1);
  claim("claim6_pair_bound", tr.pair_count >= claim6_bound,
        std::to_string(tr.pair_count) + " >= " + std::to_string(claim6_bound));
  bool subsets = std::all_of(m1_set.begin(), m1_set.end(), [&](const Triple& t) { return m_set.count(t); }) &&
                 std::all_of(m2_set.begin(), m2_set.end(), [&](const Triple& t) { return m_set.count(t); });
  claim("m1_m2_within_m", subsets);

  tr.count_chain = static_cast<long long>(tr.m.size()) - (dx - 1) - (dy - 1);
  tr.bound = lemma1_bound(k, dx, dy);
  const long long lower = static_cast<long long>(tr.m1_distinct + tr.m2_distinct) - (dx - 1) - (dy - 1);
  claim("final_chain",
        cfg.l > tr.count_chain && tr.count_chain >= lower && lower >= tr.bound,
        "l=" + std::to_string(cfg.l) + " > " + std::to_string(tr.count_chain) + " >= " +
            std::to_string(lower) + " >= " + std::to_string(tr.bound));
  claim("lemma1_bound", cfg.l > tr.bound,
        "l=" + std::to_string(cfg.l) + " > " + std::to_string(tr.bound));
  return tr;
}

}  // namespace critlab
