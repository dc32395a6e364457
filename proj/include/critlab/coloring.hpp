#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Colors are 1..k; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;
inline constexpr int kMaxColors = 63;

/// Small set of colors backed by a bitmask (bit c stands for color c).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet from_bits(std::uint64_t bits) { return ColorSet(bits); }
  /// {1, ..., k}
  static constexpr ColorSet all(int k) {
    return ColorSet(k <= 0 ? 0 : (((std::uint64_t{1} << k) - 1) << 1));
  }

  constexpr bool contains(Color c) const { return c > 0 && c <= kMaxColors && (bits_ >> c) & 1; }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; 0 when empty.
  constexpr Color first() const { return bits_ == 0 ? 0 : std::countr_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<Color> to_vector() const;

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Partial proper k-edge-coloring of a host graph.
///
/// Every mutation keeps the coloring proper: set() rejects a color already
/// present at either endpoint. A per-vertex table maps (vertex, color) to the
/// edge carrying it, so present/missing queries and chain walks are O(1) per
/// step.
class EdgeColoring {
 public:
  EdgeColoring(Graph host, int k);
  /// Builds from a full per-edge color vector (0 = uncolored); throws
  /// UsageError if the assignment is out of range or improper.
  EdgeColoring(Graph host, int k, std::span<const Color> colors);

  const Graph& graph() const noexcept { return host_; }
  int colors() const noexcept { return k_; }

  Color color(int edge_id) const;
  Color color(const Edge& e) const;
  const std::vector<Color>& assignment() const noexcept { return color_; }

  /// Assigns (or clears, with kUncolored) the color of an edge.
  void set(int edge_id, Color c);
  void set(const Edge& e, Color c);

  /// φ(v)
  ColorSet present(Vertex v) const;
  /// φ̄(v)
  ColorSet missing(Vertex v) const;
  /// Edge id at v carrying color c, if any.
  std::optional<int> edge_with(Vertex v, Color c) const;

  int colored_count() const noexcept { return colored_; }
  bool is_total() const noexcept { return colored_ == host_.size(); }

  /// Applies the color permutation perm (perm[c] is the new name of c,
  /// perm[0] ignored). perm must be a bijection on 1..k.
  EdgeColoring relabeled(std::span<const Color> perm) const;
  /// Swaps the names of colors a and b everywhere.
  EdgeColoring with_colors_exchanged(Color a, Color b) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.k_ == b.k_ && a.host_ == b.host_ && a.color_ == b.color_;
  }

 private:
  int slot(Vertex v, Color c) const { return v * (k_ + 1) + c; }

  Graph host_;
  int k_;
  int colored_ = 0;
  std::vector<Color> color_;
  std::vector<int> at_;  // (vertex, color) -> edge id or -1
  std::vector<ColorSet> present_;
};

/// From-scratch check: colors within 1..k and no two incident edges share one.
bool is_proper(const EdgeColoring& c);
/// Same check on a raw assignment.
bool is_proper(const Graph& g, int k, std::span<const Color> colors);

ColorSet present_colors(const EdgeColoring& c, Vertex v);
ColorSet missing_colors(const EdgeColoring& c, Vertex v);

enum class ChainKind { path, circuit };

/// A component of K(i, j): vertices in walk order. For a circuit the first
/// vertex is repeated at the end.
struct KempeChain {
  Color i = 0;
  Color j = 0;
  std::vector<Vertex> vertices;
  std::vector<int> edges;  // edge ids; edges[t] joins vertices[t] and vertices[t+1]
  std::vector<Color> edge_colors;
  ChainKind kind = ChainKind::path;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains_vertex(Vertex v) const;
  bool contains_edge(int edge_id) const;
};

/// P_v(i, j). Paths are listed from `start` when given (it must be an
/// endpoint), otherwise from the endpoint with the smaller index. Circuits
/// start at v. Throws UsageError if i == j or both colors are missing at v.
KempeChain kempe_chain(const EdgeColoring& c, Vertex v, Color i, Color j,
                       std::optional<Vertex> start = std::nullopt);

/// φ / P: interchanges i and j along the chain. Throws UsageError if the
/// chain is stale for c.
EdgeColoring kempe_swap(const EdgeColoring& c, const KempeChain& chain);

/// Proper (Δ+1)-edge-coloring by fan rotation and cd-path inversion.
EdgeColoring vizing_color(const Graph& g);

enum class SearchStatus { found, unsatisfiable, budget_exceeded };

const char* to_string(SearchStatus s);

inline constexpr std::uint64_t kDefaultColorBudget = 100'000'000;

struct ColorSearchResult {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for a total proper k-coloring. Deterministic;
/// `budget` caps the number of color assignments tried.
ColorSearchResult color_exact(const Graph& g, int k, std::uint64_t budget = kDefaultColorBudget);

/// color_exact on G - e. The returned coloring's host is G - e.
ColorSearchResult color_minus_edge(const Graph& g, const Edge& e, int k,
                                   std::uint64_t budget = kDefaultColorBudget);

struct ChromaticIndex {
  std::optional<int> value;  // empty only when the budget ran out
  std::uint64_t nodes = 0;
  /// A total coloring with `value` colors when known.
  std::optional<EdgeColoring> witness;
};

/// χ'(G): Δ when a Δ-coloring exists, Δ+1 when exhaustively refuted.
ChromaticIndex chromatic_index(const Graph& g, std::uint64_t budget = kDefaultColorBudget);

/// Visits every total proper k-coloring (no symmetry reduction). The visitor
/// returns false to stop. Returns the number visited; stops after `limit`.
std::uint64_t enumerate_colorings(const Graph& g, int k,
                                  const std::function<bool(const EdgeColoring&)>& visit,
                                  std::uint64_t limit = UINT64_MAX);

struct AlignedColoring {
  EdgeColoring coloring;
  Color original_missing = 0;  // the color missing at w' on input
  Color chosen = 0;            // color missing at x that became the shared one
  bool swapped = false;        // a Kempe interchange was needed
};

/// Normalizes a coloring of G - w'w so that the single color missing at w'
/// is the single color present at w, that color is missing at x, and it is
/// named 1. At most one interchange along P_{w'}(i, j) and one relabel.
/// Throws HypothesisError when the stated hypotheses do not hold.
AlignedColoring align_missing(const EdgeColoring& c, Vertex w_prime, Vertex w, Vertex x);

}  // namespace critlab
