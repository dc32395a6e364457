#include "critlab/coloring.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "critlab/error.hpp"

namespace critlab {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

EdgeColoring::EdgeColoring(Graph host, int k)
    : host_(std::move(host)),
      k_(k),
      color_(host_.size(), kUncolored),
      at_(static_cast<std::size_t>(host_.order()) * (k + 1), -1),
      present_(host_.order()) {
  if (k < 0 || k > kMaxColors) throw UsageError("color count must be in 0..63");
}

EdgeColoring::EdgeColoring(Graph host, int k, std::span<const Color> colors)
    : EdgeColoring(std::move(host), k) {
  if (static_cast<int>(colors.size()) != host_.size()) {
    throw UsageError("assignment length does not match edge count");
  }
  for (int id = 0; id < host_.size(); ++id) set(id, colors[id]);
}

Color EdgeColoring::color(int edge_id) const {
  if (edge_id < 0 || edge_id >= host_.size()) throw UsageError("edge id out of range");
  return color_[edge_id];
}

Color EdgeColoring::color(const Edge& e) const {
  auto id = host_.edge_id(e);
  if (!id) throw UsageError("edge is not in the host graph");
  return color_[*id];
}

void EdgeColoring::set(int edge_id, Color c) {
  if (edge_id < 0 || edge_id >= host_.size()) throw UsageError("edge id out of range");
  if (c < 0 || c > k_) throw UsageError("color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
  const Edge& e = host_.edge(edge_id);
  const Color old = color_[edge_id];
  if (old == c) return;
  if (c != kUncolored && (present_[e.u].contains(c) || present_[e.v].contains(c))) {
    throw UsageError("color " + std::to_string(c) + " already present at an endpoint of (" +
                     std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  if (old != kUncolored) {
    present_[e.u].erase(old);
    present_[e.v].erase(old);
    at_[slot(e.u, old)] = at_[slot(e.v, old)] = -1;
    --colored_;
  }
  if (c != kUncolored) {
    present_[e.u].insert(c);
    present_[e.v].insert(c);
    at_[slot(e.u, c)] = at_[slot(e.v, c)] = edge_id;
    ++colored_;
  }
  color_[edge_id] = c;
}

void EdgeColoring::set(const Edge& e, Color c) {
  auto id = host_.edge_id(e);
  if (!id) throw UsageError("edge is not in the host graph");
  set(*id, c);
}

ColorSet EdgeColoring::present(Vertex v) const {
  if (!host_.valid_vertex(v)) throw UsageError("vertex out of range");
  return present_[v];
}

ColorSet EdgeColoring::missing(Vertex v) const { return ColorSet::all(k_) - present(v); }

std::optional<int> EdgeColoring::edge_with(Vertex v, Color c) const {
  if (!host_.valid_vertex(v)) throw UsageError("vertex out of range");
  if (c < 1 || c > k_) return std::nullopt;
  int id = at_[slot(v, c)];
  if (id < 0) return std::nullopt;
  return id;
}

EdgeColoring EdgeColoring::relabeled(std::span<const Color> perm) const {
  if (static_cast<int>(perm.size()) != k_ + 1) throw UsageError("permutation must have k+1 entries");
  ColorSet image;
  for (Color c = 1; c <= k_; ++c) {
    if (perm[c] < 1 || perm[c] > k_ || image.contains(perm[c])) {
      throw UsageError("relabel map is not a bijection on 1..k");
    }
    image.insert(perm[c]);
  }
  std::vector<Color> next(color_.size());
  for (std::size_t id = 0; id < color_.size(); ++id) {
    next[id] = color_[id] == kUncolored ? kUncolored : perm[color_[id]];
  }
  return EdgeColoring(host_, k_, next);
}

EdgeColoring EdgeColoring::with_colors_exchanged(Color a, Color b) const {
  std::vector<Color> perm(k_ + 1);
  for (Color c = 0; c <= k_; ++c) perm[c] = c;
  std::swap(perm.at(a), perm.at(b));
  return relabeled(perm);
}

bool is_proper(const Graph& g, int k, std::span<const Color> colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<char> seen(k + 1, 0);
    for (const Incidence& in : g.incident(v)) {
      Color c = colors[in.edge];
      if (c == kUncolored) continue;
      if (c < 1 || c > k || seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

bool is_proper(const EdgeColoring& c) { return is_proper(c.graph(), c.colors(), c.assignment()); }

ColorSet present_colors(const EdgeColoring& c, Vertex v) { return c.present(v); }
ColorSet missing_colors(const EdgeColoring& c, Vertex v) { return c.missing(v); }

bool KempeChain::contains_vertex(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool KempeChain::contains_edge(int edge_id) const {
  return std::find(edges.begin(), edges.end(), edge_id) != edges.end();
}

namespace {

struct Walk {
  std::vector<Vertex> vertices;  // excludes the origin
  std::vector<int> edges;
  bool closed = false;
};

Walk walk_from(const EdgeColoring& c, Vertex origin, Color first, Color other) {
  Walk w;
  Vertex cur = origin;
  Color want = first;
  while (auto id = c.edge_with(cur, want)) {
    Vertex next = c.graph().edge(*id).other(cur);
    w.edges.push_back(*id);
    if (next == origin) {
      w.closed = true;
      break;
    }
    w.vertices.push_back(next);
    cur = next;
    want = want == first ? other : first;
  }
  return w;
}

}  // namespace

KempeChain kempe_chain(const EdgeColoring& c, Vertex v, Color i, Color j,
                       std::optional<Vertex> start) {
  if (i == j) throw UsageError("Kempe chain needs two different colors");
  if (i < 1 || i > c.colors() || j < 1 || j > c.colors()) throw UsageError("color out of range");
  ColorSet at_v = c.present(v);
  if (!at_v.contains(i) && !at_v.contains(j)) {
    throw UsageError("both colors missing at vertex " + std::to_string(v) + ": chain undefined");
  }
  KempeChain chain;
  chain.i = i;
  chain.j = j;
  Color lead = at_v.contains(i) ? i : j;
  Color trail = lead == i ? j : i;
  Walk forward = walk_from(c, v, lead, trail);
  if (forward.closed) {
    chain.kind = ChainKind::circuit;
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), forward.vertices.begin(), forward.vertices.end());
    chain.vertices.push_back(v);
    chain.edges = forward.edges;
    if (start && *start != v) throw UsageError("a circuit is listed from its query vertex");
  } else {
    Walk backward = walk_from(c, v, trail, lead);
    chain.kind = ChainKind::path;
    chain.vertices.assign(backward.vertices.rbegin(), backward.vertices.rend());
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), forward.vertices.begin(), forward.vertices.end());
    chain.edges.assign(backward.edges.rbegin(), backward.edges.rend());
    chain.edges.insert(chain.edges.end(), forward.edges.begin(), forward.edges.end());
    Vertex head = start.value_or(std::min(chain.vertices.front(), chain.vertices.back()));
    if (head != chain.vertices.front() && head != chain.vertices.back()) {
      throw UsageError("start vertex " + std::to_string(head) + " is not an endpoint of the chain");
    }
    if (head != chain.vertices.front()) {
      std::reverse(chain.vertices.begin(), chain.vertices.end());
      std::reverse(chain.edges.begin(), chain.edges.end());
    }
  }
  for (int id : chain.edges) chain.edge_colors.push_back(c.color(id));
  return chain;
}

EdgeColoring kempe_swap(const EdgeColoring& c, const KempeChain& chain) {
  if (chain.edges.size() != chain.edge_colors.size()) throw UsageError("malformed chain");
  for (std::size_t t = 0; t < chain.edges.size(); ++t) {
    if (c.color(chain.edges[t]) != chain.edge_colors[t]) {
      throw UsageError("stale Kempe chain: edge color changed since extraction");
    }
  }
  EdgeColoring out = c;
  for (int id : chain.edges) out.set(id, kUncolored);
  try {
    for (std::size_t t = 0; t < chain.edges.size(); ++t) {
      Color was = chain.edge_colors[t];
      out.set(chain.edges[t], was == chain.i ? chain.j : chain.i);
    }
  } catch (const UsageError&) {
    throw UsageError("stale Kempe chain: it is no longer a maximal component");
  }
  return out;
}

EdgeColoring vizing_color(const Graph& g) {
  const int k = g.max_degree() + 1;
  EdgeColoring c(g, k);
  std::vector<char> in_fan(g.order(), 0);
  for (int id = 0; id < g.size(); ++id) {
    if (c.color(id) != kUncolored) continue;
    const Vertex u = g.edge(id).u;

    // Maximal fan at u starting with the uncolored edge; smallest neighbor first.
    std::vector<Vertex> fan{g.edge(id).v};
    in_fan[fan[0]] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      ColorSet free_at_last = c.missing(fan.back());
      for (const Incidence& in : g.incident(u)) {
        if (in_fan[in.neighbor]) continue;
        Color col = c.color(in.edge);
        if (col != kUncolored && free_at_last.contains(col)) {
          fan.push_back(in.neighbor);
          in_fan[in.neighbor] = 1;
          grew = true;
          break;
        }
      }
    }
    for (Vertex f : fan) in_fan[f] = 0;

    const Color cu = c.missing(u).first();
    const Color d = c.missing(fan.back()).first();
    if (cu != d && c.present(u).contains(d)) {
      c = kempe_swap(c, kempe_chain(c, u, cu, d));
    }

    // First fan vertex missing d whose prefix is still a fan.
    std::size_t w = fan.size();
    for (std::size_t t = 0; t < fan.size(); ++t) {
      if (t > 0) {
        Color col = c.color(*g.edge_id(u, fan[t]));
        if (col == kUncolored || !c.missing(fan[t - 1]).contains(col)) break;
      }
      if (c.missing(fan[t]).contains(d)) {
        w = t;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("fan rotation found no free vertex");

    for (std::size_t t = 0; t < w; ++t) {
      int next_id = *g.edge_id(u, fan[t + 1]);
      Color col = c.color(next_id);
      c.set(next_id, kUncolored);
      c.set(*g.edge_id(u, fan[t]), col);
    }
    c.set(*g.edge_id(u, fan[w]), d);
  }
  return c;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::unsatisfiable: return "unsatisfiable";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

// Backtracking over a fixed edge order. Pruning:
//  * colors never used so far are interchangeable, so only the smallest
//    unused one is tried;
//  * forward check: every uncolored edge next to the one just colored must
//    keep an available color;
//  * matching bound: color c can go on at most floor(f_c / 2) more edges,
//    where f_c counts vertices with uncolored edges that still miss c.
class ExactColorSearch {
 public:
  ExactColorSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), color_(g.size(), kUncolored), used_(g.order(), 0),
        open_(g.order(), 0) {
    order_.resize(g.size());
    for (int id = 0; id < g.size(); ++id) order_[id] = id;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      return std::max(g.degree(ea.u), g.degree(ea.v)) > std::max(g.degree(eb.u), g.degree(eb.v));
    });
    for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
    palette_ = ColorSet::all(k).bits();
  }

  ColorSearchResult run() {
    ColorSearchResult r;
    if (g_.max_degree() > k_) {
      r.status = SearchStatus::unsatisfiable;
      return r;
    }
    bool ok = solve(0, 0);
    r.nodes = nodes_;
    if (ok) {
      r.status = SearchStatus::found;
      r.coloring.emplace(g_, k_, color_);
    } else {
      r.status = exhausted_ ? SearchStatus::budget_exceeded : SearchStatus::unsatisfiable;
    }
    return r;
  }

 private:
  bool matching_bound_holds(int remaining) const {
    int capacity = 0;
    for (Color c = 1; c <= k_; ++c) {
      int free = 0;
      const std::uint64_t bit = std::uint64_t{1} << c;
      for (Vertex v = 0; v < g_.order(); ++v) free += open_[v] > 0 && !(used_[v] & bit);
      capacity += free / 2;
      if (capacity >= remaining) return true;
    }
    return capacity >= remaining;
  }

  bool neighbors_keep_options(Vertex v) const {
    for (const Incidence& in : g_.incident(v)) {
      if (color_[in.edge] != kUncolored) continue;
      if ((palette_ & ~(used_[v] | used_[in.neighbor])) == 0) return false;
    }
    return true;
  }

  // Most constrained uncolored edge: fewest available colors, ties broken by
  // the static order (max endpoint degree descending, then canonical).
  int pick_edge() const {
    int best = -1, best_avail = INT_MAX;
    for (int id : order_) {
      if (color_[id] != kUncolored) continue;
      const Edge& e = g_.edge(id);
      int avail = std::popcount(palette_ & ~(used_[e.u] | used_[e.v]));
      if (avail < best_avail) {
        best = id;
        best_avail = avail;
        if (avail <= 1) break;
      }
    }
    return best;
  }

  bool solve(int pos, int highest) {
    const int m = static_cast<int>(order_.size());
    if (pos == m) return true;
    if (!matching_bound_holds(m - pos)) return false;
    const int id = pick_edge();
    const Edge& e = g_.edge(id);
    const int limit = std::min(highest + 1, k_);
    std::uint64_t avail = palette_ & ~(used_[e.u] | used_[e.v]) & ColorSet::all(limit).bits();
    for (; avail != 0; avail &= avail - 1) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const Color c = std::countr_zero(avail);
      const std::uint64_t bit = std::uint64_t{1} << c;
      color_[id] = c;
      used_[e.u] |= bit;
      used_[e.v] |= bit;
      --open_[e.u];
      --open_[e.v];
      if (neighbors_keep_options(e.u) && neighbors_keep_options(e.v) &&
          solve(pos + 1, std::max(highest, c))) {
        return true;
      }
      color_[id] = kUncolored;
      used_[e.u] &= ~bit;
      used_[e.v] &= ~bit;
      ++open_[e.u];
      ++open_[e.v];
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::uint64_t palette_ = 0;
  std::vector<int> order_;
  std::vector<Color> color_;
  std::vector<std::uint64_t> used_;
  std::vector<int> open_;
};

}  // namespace

ColorSearchResult color_exact(const Graph& g, int k, std::uint64_t budget) {
  if (k < 0 || k > kMaxColors) throw UsageError("color count must be in 0..63");
  return ExactColorSearch(g, k, budget).run();
}

ColorSearchResult color_minus_edge(const Graph& g, const Edge& e, int k, std::uint64_t budget) {
  Edge canon = Edge::make(e.u, e.v);
  if (!g.has_edge(canon)) throw UsageError("edge is not in the graph");
  return color_exact(g.without_edge(canon), k, budget);
}

ChromaticIndex chromatic_index(const Graph& g, std::uint64_t budget) {
  ChromaticIndex out;
  const int delta = g.max_degree();
  ColorSearchResult r = color_exact(g, delta, budget);
  out.nodes = r.nodes;
  switch (r.status) {
    case SearchStatus::found:
      out.value = delta;
      out.witness = std::move(r.coloring);
      break;
    case SearchStatus::unsatisfiable:
      out.value = delta + 1;
      out.witness = vizing_color(g);
      break;
    case SearchStatus::budget_exceeded:
      break;
  }
  return out;
}

std::uint64_t enumerate_colorings(const Graph& g, int k,
                                  const std::function<bool(const EdgeColoring&)>& visit,
                                  std::uint64_t limit) {
  if (k < 0 || k > kMaxColors) throw UsageError("color count must be in 0..63");
  std::vector<Color> color(g.size(), kUncolored);
  std::vector<std::uint64_t> used(g.order(), 0);
  const std::uint64_t palette = ColorSet::all(k).bits();
  std::uint64_t count = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int id) -> void {
    if (stop) return;
    if (id == g.size()) {
      ++count;
      if (!visit(EdgeColoring(g, k, color)) || count >= limit) stop = true;
      return;
    }
    const Edge& e = g.edge(id);
    for (std::uint64_t avail = palette & ~(used[e.u] | used[e.v]); avail != 0 && !stop;
         avail &= avail - 1) {
      const Color c = std::countr_zero(avail);
      const std::uint64_t bit = std::uint64_t{1} << c;
      color[id] = c;
      used[e.u] |= bit;
      used[e.v] |= bit;
      self(self, id + 1);
      used[e.u] &= ~bit;
      used[e.v] &= ~bit;
    }
    color[id] = kUncolored;
  };
  if (limit > 0) rec(rec, 0);
  return count;
}

AlignedColoring align_missing(const EdgeColoring& c, Vertex w_prime, Vertex w, Vertex x) {
  const Graph& h = c.graph();
  const int k = c.colors();
  for (Vertex v : {w_prime, w, x}) {
    if (!h.valid_vertex(v)) throw UsageError("vertex out of range");
  }
  if (w_prime == w || w_prime == x || w == x) throw HypothesisError("w', w and x must be distinct");
  if (h.adjacent(w_prime, w)) throw HypothesisError("coloring must be of G - w'w (edge still present)");
  if (!c.is_total()) throw HypothesisError("coloring of G - w'w is not total");
  if (h.degree(w) != 1) throw HypothesisError("hypothesis d(w)=2 violated");
  if (h.degree(x) >= k) throw HypothesisError("hypothesis d(x)<k violated");
  const ColorSet miss_wp = c.missing(w_prime);
  if (miss_wp.size() != 1 || c.present(w) != miss_wp) {
    throw HypothesisError("missing color at w' is not the single color at w; w'w is not critical");
  }

  AlignedColoring out{c, miss_wp.first(), 0, false};
  const Color i = out.original_missing;
  const ColorSet miss_x = c.missing(x);
  const Color j = miss_x.contains(i) ? i : miss_x.first();
  out.chosen = j;
  if (i != j) {
    KempeChain chain = kempe_chain(c, w_prime, i, j, w_prime);
    if (chain.kind != ChainKind::path || chain.back() != w) {
      throw HypothesisError("P_{w'}(i,j) is not a w',w-path; w'w is not critical");
    }
    out.coloring = kempe_swap(c, chain);
    out.swapped = true;
  }
  if (j != 1) out.coloring = out.coloring.with_colors_exchanged(j, 1);

  const EdgeColoring& r = out.coloring;
  if (r.missing(w_prime) != ColorSet::from_bits(2) || r.present(w) != ColorSet::from_bits(2) ||
      !r.missing(x).contains(1)) {
    throw std::logic_error("align_missing post-condition failed");
  }
  return out;
}

}  // namespace critlab
