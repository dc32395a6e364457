#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace critlab {

using Vertex = int;

/// Undirected edge in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Canonicalizes the pair; throws UsageError on a loop.
  static Edge make(Vertex a, Vertex b);

  bool has(Vertex w) const noexcept { return u == w || v == w; }
  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, deduplicated vertex indices.
using VertexSet = std::vector<Vertex>;
/// Sorted, deduplicated canonical edges.
using EdgeSet = std::vector<Edge>;

/// Sorts and deduplicates in place.
void normalize(VertexSet& s);
void normalize(EdgeSet& s);

struct Incidence {
  Vertex neighbor;
  int edge;  // index into Graph::edges()
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once in canonical sorted order; an edge's position in
/// edges() is its id, which colorings and factor searches index by. Copies
/// share the underlying storage.
class Graph {
 public:
  /// Largest order for which adjacency bitmasks are maintained.
  static constexpr int kMaskLimit = 64;

  Graph();
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws UsageError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept;
  int size() const noexcept;

  const std::vector<Edge>& edges() const noexcept;
  const Edge& edge(int id) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const Incidence> incident(Vertex v) const;

  int degree(Vertex v) const;
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<int> edge_id(Vertex a, Vertex b) const;
  std::optional<int> edge_id(const Edge& e) const { return edge_id(e.u, e.v); }
  bool has_edge(const Edge& e) const { return edge_id(e).has_value(); }

  /// Neighbor bitmask; only valid when order() <= kMaskLimit.
  std::uint64_t adjacency_mask(Vertex v) const;

  Graph without_edge(const Edge& e) const;
  Graph without_edges(std::span<const Edge> removed) const;

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in ascending order.
  Graph induced(const VertexSet& keep) const;

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);

/// Connected components of G - removed, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

bool is_connected(const Graph& g);

/// E_G(A, B); A and B must be disjoint.
EdgeSet boundary_edges(const Graph& g, const VertexSet& a, const VertexSet& b);
/// e_G(A, B).
int boundary_count(const Graph& g, const VertexSet& a, const VertexSet& b);

/// N(A): vertices outside A adjacent to some member of A.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

bool is_stable(const Graph& g, const VertexSet& x);

bool is_bridgeless(const Graph& g);

/// The two vertex sides of G - cut when the cut is an inclusion-minimal edge
/// cut of a connected graph; nullopt otherwise. The side containing the
/// smallest vertex comes first.
std::optional<std::pair<VertexSet, VertexSet>> minimal_cut_sides(const Graph& g,
                                                                std::span<const Edge> cut);

bool is_minimal_edge_cut(const Graph& g, std::span<const Edge> cut);

/// Vertices of degree 2.
int divalent_count(const Graph& g);

}  // namespace critlab
