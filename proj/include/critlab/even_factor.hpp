#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critlab/coloring.hpp"
#include "critlab/graph.hpp"

namespace critlab {

/// A vertex set X together with the decomposition of G - X and the value
/// Σ_{v∈X}(d(v)-2) - q(G;X).
struct Barrier {
  VertexSet x;
  std::vector<VertexSet> components;  // D_1..D_n, sorted by smallest member
  std::vector<int> boundary;          // e_G(D_i, X)
  std::vector<bool> odd;              // e_G(D_i, X) odd
  int q = 0;
  int deficiency = 0;

  bool is_barrier() const { return deficiency < 0; }
};

/// Every vertex has even, positive degree in `edges` (which must lie in G).
bool is_even_factor(const Graph& g, const EdgeSet& edges);

inline constexpr std::uint64_t kDefaultFactorBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultBarrierBudget = std::uint64_t{1} << 24;

struct EvenFactorResult {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<EdgeSet> factor;
  std::uint64_t nodes = 0;
};

/// Backtracking with parity propagation. "unsatisfiable" is an exhaustive
/// refutation.
EvenFactorResult find_even_factor(const Graph& g, std::uint64_t budget = kDefaultFactorBudget);

/// Evaluates X. Throws UsageError unless X is a proper subset of V(G).
Barrier deficiency(const Graph& g, const VertexSet& x);

struct BarrierResult {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<Barrier> barrier;
  std::uint64_t subsets = 0;  // subsets examined, counted in enumeration order
};

/// First X (by size, then lexicographically) with negative deficiency, hence
/// a minimum-cardinality one. Serial reference implementation; n <= 64.
BarrierResult find_barrier(const Graph& g, std::uint64_t budget = kDefaultBarrierBudget);

/// Same answer as find_barrier, with each size level split into blocks by
/// smallest member and scanned by an OpenMP team.
BarrierResult find_barrier_parallel(const Graph& g, std::uint64_t budget = kDefaultBarrierBudget,
                                    int threads = 0);

struct BarrierProperties {
  bool a = false;  // deficiency < 0
  bool b = false;  // e_G(D_i, v) <= 1 for all i and v in X
  bool c = false;  // X stable
  bool d = false;  // every e_G(D_i, X) odd
  bool e = false;  // the divalent-count inequality
  /// Both sides of (e) doubled to stay integral:
  /// 2Σ_{d(v)≠2}(d(v)-3) + Σ(e_G(D_i,X)-3) < 2|{v∈X : d(v)=2}|.
  int e_lhs2 = 0;
  int e_rhs2 = 0;

  bool all() const { return a && b && c && d && e; }
};

BarrierProperties check_properties(const Graph& g, const VertexSet& x);

struct NormalizedBarrier {
  Barrier barrier;
  BarrierProperties properties;
  VertexSet removed;  // vertices dropped from the input, in removal order
};

/// Drops vertices of X in ascending order while the deficiency stays
/// negative, restarting after every removal. Requires g connected and X a
/// barrier (UsageError otherwise).
NormalizedBarrier normalize_barrier(const Graph& g, const VertexSet& x);

}  // namespace critlab
