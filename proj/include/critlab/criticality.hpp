#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critlab/coloring.hpp"
#include "critlab/graph.hpp"

namespace critlab {

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct EdgeCriticality {
  Edge edge;
  Verdict critical = Verdict::unknown;
  /// Proper Δ-coloring of G - e when critical.
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

struct CriticalityReport {
  std::string graph_id;
  int k = 0;                // Δ(G)
  std::optional<int> chi;   // χ'(G), empty when the budget ran out
  std::vector<EdgeCriticality> edges;  // canonical edge order; may stop early
  Verdict k_critical = Verdict::unknown;
  std::uint64_t nodes = 0;
  bool complete = true;     // false when per-edge testing stopped early

  const EdgeCriticality* find(const Edge& e) const;
};

struct CriticalityOptions {
  std::uint64_t budget = kDefaultColorBudget;
  /// Stop after the first non-critical edge; the overall verdict is still exact.
  bool stop_at_first_noncritical = false;
  /// Threads for per-edge tests (1 = sequential). Results are independent of it.
  int threads = 1;
  std::string graph_id;
};

/// χ' computed once and reusable across per-edge checks.
struct ClassVerdict {
  int delta = 0;
  std::optional<int> chi;
  std::uint64_t nodes = 0;

  bool class_two() const { return chi && *chi == delta + 1; }
};

ClassVerdict classify(const Graph& g, std::uint64_t budget = kDefaultColorBudget);

/// e is critical iff χ'(G) = Δ+1 and G - e is Δ-colorable.
EdgeCriticality is_critical_edge(const Graph& g, const Edge& e,
                                 std::uint64_t budget = kDefaultColorBudget,
                                 const std::optional<ClassVerdict>& cls = std::nullopt);

/// Requires g connected with at least one edge (UsageError otherwise).
CriticalityReport is_k_critical(const Graph& g, const CriticalityOptions& opts = {});

/// Deletes non-critical edges (canonical order, restarting after each
/// deletion) until every edge is critical, then drops isolated vertices.
/// Requires χ'(g) = Δ+1. Returns nullopt on budget exhaustion.
std::optional<Graph> critical_subgraph(const Graph& g, std::uint64_t budget = kDefaultColorBudget);

}  // namespace critlab
