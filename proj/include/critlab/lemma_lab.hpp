#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "critlab/coloring.hpp"
#include "critlab/criticality.hpp"
#include "critlab/even_factor.hpp"
#include "critlab/graph.hpp"

namespace critlab {

using Rational = boost::rational<long long>;

// ---------------------------------------------------------------------------
// Lemma 1: a vertex set A whose neighbourhood is {x, y, w_1..w_l}, one edge to
// each neighbour, d(y) <= d(x) < k and every w_i divalent.

struct Lemma1Config {
  VertexSet a;
  Vertex x = -1;
  Vertex y = -1;
  VertexSet w_list;
  int l = 0;
  int k = 0;
  /// The critical edge w'w, w' in A and w in w_list.
  Vertex w_prime = -1;
  Vertex w = -1;
};

/// (h, z, h'): h and h' present at z, h on the single edge from A to z.
struct Triple {
  Color h = 0;
  Vertex z = -1;
  Color h2 = 0;

  auto operator<=>(const Triple&) const = default;
};

struct Lemma1SearchOptions {
  /// Largest |A| considered; negative means n - 3.
  int size_cap = -1;
  /// Subsets examined before the sweep is declared incomplete.
  std::uint64_t subset_budget = std::uint64_t{1} << 22;
  std::uint64_t color_budget = kDefaultColorBudget;
  /// Reuses per-edge criticality verdicts when provided.
  const CriticalityReport* report = nullptr;
};

struct Lemma1Search {
  std::vector<Lemma1Config> configs;
  bool complete = true;
  std::uint64_t subsets = 0;
  int size_cap = 0;
};

/// Enumerates all sets A (|A| <= cap) meeting the hypotheses, one
/// config per divalent w whose edge into A is critical. Requires Δ >= 3 and
/// χ' = Δ+1 (UsageError otherwise).
Lemma1Search find_lemma1_configs(const Graph& g, const Lemma1SearchOptions& opts = {});

/// Throws HypothesisError naming the first violated hypothesis. Criticality
/// of w'w is not re-derived here.
void validate_lemma1_config(const Graph& g, const Lemma1Config& cfg);

/// k(k - d(y)) - d(x) + 1
long long lemma1_bound(int k, int dx, int dy);
bool lemma1_bound_holds(int k, int dx, int dy, int l);
/// Validates cfg, then evaluates l > k(k - d(y)) - d(x) + 1.
bool lemma1_bound_check(const Graph& g, const Lemma1Config& cfg);

struct ClaimCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Lemma1Trace {
  std::optional<AlignedColoring> aligned;
  std::vector<Triple> m;  // sorted
  /// Last triple of P_{w'}(1, i), indexed by i - 2.
  std::vector<std::pair<Color, Triple>> m1;
  struct M2Entry {
    Color i = 0;
    Color j = 0;
    Vertex z = -1;
    std::optional<Triple> first;  // first triple of P_{z_i}(i_1, j)
  };
  std::vector<M2Entry> m2;
  int m1_distinct = 0;
  int m2_distinct = 0;
  int pair_count = 0;  // |{(j, z_i)}|
  long long bound = 0;
  long long count_chain = 0;  // |M| - (d(x)-1) - (d(y)-1)
  std::vector<ClaimCheck> claims;
  std::string note;

  bool falsified() const;
};

/// Runs the claim machinery from a proper k-coloring of G - w'w.
Lemma1Trace lemma1_trace(const Graph& g, const Lemma1Config& cfg, const EdgeColoring& minus_edge);
/// Obtains the coloring of G - w'w by exact search first.
Lemma1Trace lemma1_trace(const Graph& g, const Lemma1Config& cfg,
                         std::uint64_t budget = kDefaultColorBudget);

/// Triples of M contained in a chain, in walk order.
std::vector<Triple> triples_on_chain(const Graph& g, const Lemma1Config& cfg,
                                     const EdgeColoring& c, const KempeChain& chain);

// ---------------------------------------------------------------------------
// Lemma 2: inclusion-minimal 3-edge-cuts {e1, e2, e3} and colorings of the two
// sides G_A and G_B.

enum class CutColoringType { type1 = 1, type2, type3, type4, type5 };

int to_int(CutColoringType t);
CutColoringType cut_type(Color c1, Color c2, Color c3);
/// UsageError when a cut edge is uncolored or absent from c's host.
CutColoringType cut_type(const EdgeColoring& c, const Edge& e1, const Edge& e2, const Edge& e3);

struct CutSide {
  Graph graph;                     // induced on the side plus the far endpoints
  std::vector<Vertex> to_global;   // local -> global vertex
  std::array<Edge, 3> cut;         // e1, e2, e3 in local labels
};

struct ThreeCutSplit {
  std::array<Edge, 3> cut;  // e_i = x_i y_i in global labels
  std::array<Vertex, 3> x{};
  std::array<Vertex, 3> y{};
  VertexSet side_a;  // contains vertex min(V)
  VertexSet side_b;
  CutSide ga;
  CutSide gb;
};

/// Throws UsageError unless the edges form an inclusion-minimal 3-edge-cut.
ThreeCutSplit split_three_cut(const Graph& g, const std::array<Edge, 3>& cut);

/// Merges colorings of G_A and G_B into one of G, relabeling G_B's colors.
/// nullopt when their cut types differ.
std::optional<EdgeColoring> combine_cut_colorings(const Graph& g, const ThreeCutSplit& split,
                                                  const EdgeColoring& ga_coloring,
                                                  const EdgeColoring& gb_coloring);

struct Lemma2Options {
  std::uint64_t budget = kDefaultColorBudget;
  const CriticalityReport* report = nullptr;
};

struct Lemma2Result {
  std::vector<std::array<Edge, 3>> violations;  // critical cuts touching a divalent vertex
  std::uint64_t triples = 0;
  int minimal_cuts = 0;
  int critical_cuts = 0;
  bool complete = true;  // false if some criticality verdict was unknown
};

/// Requires Δ > 3 and χ' = Δ+1 (UsageError otherwise).
Lemma2Result lemma2_check(const Graph& g, const Lemma2Options& opts = {});

// ---------------------------------------------------------------------------
// Main theorem audit.

/// g(D) = Σ_{v∈N(D)} (d(v)-2)/d(v) for a component D of G - X.
Rational component_weight(const Graph& g, const VertexSet& x, const VertexSet& d);

/// Inequalities closing the two cases of the divalent-count argument.
struct ProofArithmetic {
  int k = 0;
  long long case1_lower = 0;     // k(k-4)+2
  long long target = 0;          // 2k-6
  long long case2_three = 0;     // 2(k-3)
  long long case2_five = 0;      // (k-3) + (k-2)
  bool holds = false;
};

ProofArithmetic proof_arithmetic(int k);

struct AuditOptions {
  std::uint64_t color_budget = kDefaultColorBudget;
  std::uint64_t factor_budget = kDefaultFactorBudget;
  std::uint64_t barrier_budget = kDefaultBarrierBudget;
  const CriticalityReport* report = nullptr;
};

struct AuditVerdict {
  int k = 0;
  int divalent_count = 0;
  bool hypothesis_met = false;  // divalent_count <= 2k - 6
  Verdict criticality = Verdict::unknown;
  SearchStatus factor_status = SearchStatus::budget_exceeded;
  std::optional<EdgeSet> even_factor;
  SearchStatus barrier_status = SearchStatus::budget_exceeded;
  std::optional<NormalizedBarrier> barrier;
  std::vector<Rational> g_values;
  Rational g_sum{0};
  bool pivot_holds = false;      // Σ g(D_i) < n
  bool theorem2_consistent = true;
  bool falsification = false;
  ProofArithmetic arithmetic;

  bool conclusive() const;
};

/// Requires Δ >= 3 and a k-critical input (UsageError otherwise). An
/// inconclusive criticality check returns a verdict with criticality unknown.
AuditVerdict theorem1_audit(const Graph& g, const AuditOptions& opts = {});

}  // namespace critlab
