#include "critlab/graph.hpp"

#include <algorithm>
#include <string>

#include "critlab/error.hpp"

namespace critlab {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw UsageError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void normalize(EdgeSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

struct Graph::Data {
  int n = 0;
  std::vector<Edge> edges;
  // CSR layout: neighbors and incidences of v live in [offset[v], offset[v+1]).
  std::vector<int> offset;
  std::vector<Vertex> neighbors;
  std::vector<Incidence> incidences;
  std::vector<std::uint64_t> masks;
  int max_degree = 0;
  int min_degree = 0;
};

Graph::Graph() : Graph(0) {}

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw UsageError("negative vertex count");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->edges.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge c = Edge::make(e.u, e.v);
    if (c.u < 0 || c.v >= n) {
      throw UsageError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    }
    d->edges.push_back(c);
  }
  std::sort(d->edges.begin(), d->edges.end());
  if (std::adjacent_find(d->edges.begin(), d->edges.end()) != d->edges.end()) {
    throw UsageError("parallel edges are not allowed");
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : d->edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  d->offset.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) d->offset[v + 1] = d->offset[v] + deg[v];
  d->neighbors.resize(d->offset[n]);
  d->incidences.resize(d->offset[n]);
  std::vector<int> fill(d->offset.begin(), d->offset.end() - 1);
  for (int id = 0; id < static_cast<int>(d->edges.size()); ++id) {
    const Edge& e = d->edges[id];
    d->incidences[fill[e.u]++] = {e.v, id};
    d->incidences[fill[e.v]++] = {e.u, id};
  }
  for (int v = 0; v < n; ++v) {
    auto first = d->incidences.begin() + d->offset[v];
    auto last = d->incidences.begin() + d->offset[v + 1];
    std::sort(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor < b.neighbor;
    });
    for (int p = d->offset[v]; p < d->offset[v + 1]; ++p) {
      d->neighbors[p] = d->incidences[p].neighbor;
    }
  }
  if (n <= kMaskLimit) {
    d->masks.assign(n, 0);
    for (const Edge& e : d->edges) {
      d->masks[e.u] |= std::uint64_t{1} << e.v;
      d->masks[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  if (n > 0) {
    d->max_degree = *std::max_element(deg.begin(), deg.end());
    d->min_degree = *std::min_element(deg.begin(), deg.end());
  }
  data_ = std::move(d);
}

int Graph::order() const noexcept { return data_->n; }
int Graph::size() const noexcept { return static_cast<int>(data_->edges.size()); }
const std::vector<Edge>& Graph::edges() const noexcept { return data_->edges; }

const Edge& Graph::edge(int id) const {
  if (id < 0 || id >= size()) throw UsageError("edge id out of range");
  return data_->edges[id];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return {data_->neighbors.data() + data_->offset[v],
          static_cast<std::size_t>(data_->offset[v + 1] - data_->offset[v])};
}

std::span<const Incidence> Graph::incident(Vertex v) const {
  if (!valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return {data_->incidences.data() + data_->offset[v],
          static_cast<std::size_t>(data_->offset[v + 1] - data_->offset[v])};
}

int Graph::degree(Vertex v) const {
  if (!valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return data_->offset[v + 1] - data_->offset[v];
}

int Graph::max_degree() const noexcept { return data_->max_degree; }
int Graph::min_degree() const noexcept { return data_->min_degree; }

bool Graph::adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
  if (!valid_vertex(a) || !valid_vertex(b) || a == b) return std::nullopt;
  auto inc = incident(a);
  auto it = std::lower_bound(inc.begin(), inc.end(), b,
                             [](const Incidence& x, Vertex t) { return x.neighbor < t; });
  if (it == inc.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

std::uint64_t Graph::adjacency_mask(Vertex v) const {
  if (order() > kMaskLimit) throw UsageError("adjacency masks need n <= 64");
  if (!valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return data_->masks[v];
}

Graph Graph::without_edge(const Edge& e) const { return without_edges({&e, 1}); }

Graph Graph::without_edges(std::span<const Edge> removed) const {
  EdgeSet drop(removed.begin(), removed.end());
  for (Edge& e : drop) {
    e = Edge::make(e.u, e.v);
    if (!has_edge(e)) {
      throw UsageError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is not in the graph");
    }
  }
  normalize(drop);
  std::vector<Edge> kept;
  kept.reserve(edges().size());
  std::set_difference(edges().begin(), edges().end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(order(), kept);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> local(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!valid_vertex(keep[i])) throw UsageError("vertex out of range in induced()");
    local[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) sub.push_back(Edge::make(local[e.u], local[e.v]));
  }
  return Graph(static_cast<int>(keep.size()), sub);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }
int max_degree(const Graph& g) { return g.max_degree(); }

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (!g.valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<char> blocked = membership(g, removed);
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (blocked[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!blocked[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

EdgeSet boundary_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<char> in_a = membership(g, a);
  std::vector<char> in_b = membership(g, b);
  for (Vertex v : a) {
    if (in_b[v]) throw UsageError("boundary_edges requires disjoint vertex sets");
  }
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if ((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u])) out.push_back(e);
  }
  return out;
}

int boundary_count(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return static_cast<int>(boundary_edges(g, a, b).size());
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
  std::vector<char> in_a = membership(g, a);
  VertexSet out;
  for (Vertex v : a) {
    for (Vertex u : g.neighbors(v)) {
      if (!in_a[u]) out.push_back(u);
    }
  }
  normalize(out);
  return out;
}

bool is_stable(const Graph& g, const VertexSet& x) {
  std::vector<char> in = membership(g, x);
  for (Vertex v : x) {
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  return true;
}

bool is_bridgeless(const Graph& g) {
  // Lowpoint DFS, iterative. An edge (parent, v) is a bridge iff low[v] > disc[parent].
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        Incidence in = inc[f.next++];
        if (in.edge == f.parent_edge) continue;
        if (disc[in.neighbor] >= 0) {
          low[f.v] = std::min(low[f.v], disc[in.neighbor]);
        } else {
          disc[in.neighbor] = low[in.neighbor] = timer++;
          stack.push_back({in.neighbor, in.edge, 0});
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> minimal_cut_sides(const Graph& g,
                                                                std::span<const Edge> cut) {
  if (cut.empty() || !is_connected(g)) return std::nullopt;
  EdgeSet canon(cut.begin(), cut.end());
  for (Edge& e : canon) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e)) return std::nullopt;
  }
  normalize(canon);
  if (canon.size() != cut.size()) return std::nullopt;
  auto parts = components(g.without_edges(canon));
  if (parts.size() != 2) return std::nullopt;
  std::vector<int> side(g.order(), 0);
  for (Vertex v : parts[1]) side[v] = 1;
  // With exactly two sides, the cut is minimal iff every cut edge crosses:
  // a non-crossing edge could be dropped and the rest would still disconnect.
  for (const Edge& e : canon) {
    if (side[e.u] == side[e.v]) return std::nullopt;
  }
  return std::make_pair(parts[0], parts[1]);
}

bool is_minimal_edge_cut(const Graph& g, std::span<const Edge> cut) {
  return minimal_cut_sides(g, cut).has_value();
}

int divalent_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 2;
  return count;
}

}  // namespace critlab
