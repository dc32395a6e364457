#include "critlab/even_factor.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>

#include "critlab/error.hpp"

namespace critlab {

bool is_even_factor(const Graph& g, const EdgeSet& edges) {
  std::vector<int> deg(g.order(), 0);
  EdgeSet canon = edges;
  normalize(canon);
  if (canon.size() != edges.size()) return false;
  for (const Edge& e : canon) {
    if (!g.has_edge(e)) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 2 && d % 2 == 0; });
}

namespace {

// Each vertex needs an even number >= 2 of chosen incident edges. Decisions
// are kept on a trail so backtracking only undoes what changed.
class EvenFactorSearch {
 public:
  EvenFactorSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), state_(g.size(), kOpen), chosen_(g.order(), 0),
        open_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
  }

  EvenFactorResult run() {
    EvenFactorResult r;
    bool ok = true;
    for (Vertex v = 0; v < g_.order() && ok; ++v) ok = settle(v);
    ok = ok && propagate() && solve();
    r.nodes = nodes_;
    if (ok) {
      r.status = SearchStatus::found;
      EdgeSet f;
      for (int id = 0; id < g_.size(); ++id) {
        if (state_[id] == kIn) f.push_back(g_.edge(id));
      }
      r.factor = std::move(f);
    } else {
      r.status = exhausted_ ? SearchStatus::budget_exceeded : SearchStatus::unsatisfiable;
    }
    return r;
  }

 private:
  static constexpr signed char kOpen = -1, kOut = 0, kIn = 1;

  void decide(int id, signed char value) {
    state_[id] = value;
    trail_.push_back(id);
    const Edge& e = g_.edge(id);
    for (Vertex v : {e.u, e.v}) {
      --open_[v];
      chosen_[v] += value;
      queue_.push_back(v);
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int id = trail_.back();
      trail_.pop_back();
      const Edge& e = g_.edge(id);
      for (Vertex v : {e.u, e.v}) {
        ++open_[v];
        chosen_[v] -= state_[id];
      }
      state_[id] = kOpen;
    }
  }

  // Checks v and queues the forced decisions at v.
  bool settle(Vertex v) {
    const int in = chosen_[v], open = open_[v];
    if (in + open < 2) return false;
    if (open == 0) return in % 2 == 0;
    if (open == 1 || (in == 0 && open == 2)) {
      for (const Incidence& inc : g_.incident(v)) {
        if (state_[inc.edge] != kOpen) continue;
        if (open == 1) {
          decide(inc.edge, in % 2 == 1 ? kIn : kOut);
        } else {
          decide(inc.edge, kIn);
        }
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Vertex v = queue_.back();
      queue_.pop_back();
      if (!settle(v)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  bool solve() {
    Vertex pick = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (open_[v] > 0 && (pick < 0 || open_[v] < open_[pick])) pick = v;
    }
    if (pick < 0) return true;  // everything decided and every vertex settled
    int branch = -1;
    for (const Incidence& inc : g_.incident(pick)) {
      if (state_[inc.edge] == kOpen) {
        branch = inc.edge;
        break;
      }
    }
    for (signed char value : {kIn, kOut}) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const std::size_t mark = trail_.size();
      decide(branch, value);
      if (propagate() && solve()) return true;
      undo_to(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<signed char> state_;
  std::vector<int> chosen_;
  std::vector<int> open_;
  std::vector<int> trail_;
  std::vector<Vertex> queue_;
};

VertexSet checked_proper_subset(const Graph& g, const VertexSet& x) {
  VertexSet s = x;
  normalize(s);
  for (Vertex v : s) {
    if (!g.valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  }
  if (static_cast<int>(s.size()) >= g.order()) {
    throw UsageError("X must be a proper subset of V(G)");
  }
  return s;
}

// Bitmask evaluation of Σ_{v∈X}(d(v)-2) - q(G;X) for the subset scans.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const Graph& g) : n_(g.order()), adj_(g.order()), deg_(g.order()) {
    if (n_ > Graph::kMaskLimit) throw UsageError("barrier search supports n <= 64");
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = g.adjacency_mask(v);
      deg_[v] = g.degree(v);
    }
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  int deficiency(std::uint64_t x) const {
    int sum = 0;
    for (std::uint64_t b = x; b != 0; b &= b - 1) sum += deg_[std::countr_zero(b)] - 2;
    int q = 0;
    std::uint64_t rest = all_ & ~x;
    while (rest != 0) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t grow = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1) grow |= adj_[std::countr_zero(b)];
        grow &= rest & ~comp;
        comp |= grow;
        frontier = grow;
      }
      int boundary = 0;
      for (std::uint64_t b = comp; b != 0; b &= b - 1) {
        boundary += std::popcount(adj_[std::countr_zero(b)] & x);
      }
      q += boundary & 1;
      rest &= ~comp;
    }
    return sum - q;
  }

  int order() const { return n_; }

 private:
  int n_;
  std::uint64_t all_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> deg_;
};

using Binomials = std::vector<std::vector<std::uint64_t>>;

Binomials binomials(int n) {
  Binomials c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  return c;
}

// Lexicographic scan of the size-`s` subsets whose smallest member is
// `lead`; returns the rank of the first barrier within the block, scanning
// at most `cap` subsets.
std::optional<std::uint64_t> scan_block(const MaskEvaluator& ev, int s, int lead,
                                        std::uint64_t cap) {
  const int n = ev.order();
  std::vector<int> idx(s);
  idx[0] = lead;
  for (int t = 1; t < s; ++t) idx[t] = lead + t;
  for (std::uint64_t rank = 0; rank < cap; ++rank) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    if (ev.deficiency(mask) < 0) return rank;
    // Advance positions 1..s-1 to the next combination; position 0 is fixed.
    int t = s - 1;
    while (t >= 1 && idx[t] == n - s + t) --t;
    if (t < 1) break;
    ++idx[t];
    for (int r = t + 1; r < s; ++r) idx[r] = idx[r - 1] + 1;
  }
  return std::nullopt;
}

VertexSet unrank_in_block(int n, int s, int lead, std::uint64_t rank, const Binomials& c) {
  VertexSet out{lead};
  int next = lead + 1;
  for (int t = 1; t < s; ++t) {
    for (int v = next;; ++v) {
      std::uint64_t block = c[n - 1 - v][s - 1 - t];
      if (rank < block) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

BarrierResult barrier_search(const Graph& g, std::uint64_t budget, int threads, bool parallel) {
  BarrierResult result;
  const MaskEvaluator ev(g);
  const int n = g.order();
  if (n == 0) throw UsageError("empty graph");
  const Binomials c = binomials(n);
  std::uint64_t before = 0;

  // Size 0 is the empty set, which never has negative deficiency but counts.
  for (int s = 0; s < n; ++s) {
    const std::uint64_t level = c[n][s];
    const std::uint64_t allowance = budget > before ? budget - before : 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    VertexSet best_set;
    if (s == 0) {
      if (allowance > 0 && ev.deficiency(0) < 0) best = 0;
    } else {
      const int leads = n - s + 1;
      std::vector<std::uint64_t> offset(leads + 1, 0);
      for (int v = 0; v < leads; ++v) offset[v + 1] = offset[v] + c[n - 1 - v][s - 1];
      std::vector<std::optional<std::uint64_t>> hit(leads);
      std::atomic<std::uint64_t> found_at{std::numeric_limits<std::uint64_t>::max()};
      auto run_block = [&](int v) {
        if (offset[v] >= allowance || offset[v] >= found_at.load()) return;
        std::uint64_t cap = std::min(offset[v + 1], allowance) - offset[v];
        hit[v] = scan_block(ev, s, v, cap);
        if (hit[v]) {
          std::uint64_t r = offset[v] + *hit[v];
          std::uint64_t cur = found_at.load();
          while (r < cur && !found_at.compare_exchange_weak(cur, r)) {
          }
        }
      };
      if (parallel) {
        const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
        for (int v = 0; v < leads; ++v) run_block(v);
      } else {
        for (int v = 0; v < leads; ++v) {
          run_block(v);
          if (hit[v]) break;
        }
      }
      for (int v = 0; v < leads; ++v) {
        if (hit[v]) {
          best = offset[v] + *hit[v];
          best_set = unrank_in_block(n, s, v, *hit[v], c);
          break;
        }
      }
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) {
      result.status = SearchStatus::found;
      result.subsets = before + best + 1;
      result.barrier = deficiency(g, best_set);
      return result;
    }
    if (level > allowance) {
      result.status = SearchStatus::budget_exceeded;
      result.subsets = budget;
      return result;
    }
    before += level;
  }
  result.status = SearchStatus::unsatisfiable;
  result.subsets = before;
  return result;
}

}  // namespace

EvenFactorResult find_even_factor(const Graph& g, std::uint64_t budget) {
  return EvenFactorSearch(g, budget).run();
}

Barrier deficiency(const Graph& g, const VertexSet& x) {
  Barrier b;
  b.x = checked_proper_subset(g, x);
  std::vector<char> in_x(g.order(), 0);
  for (Vertex v : b.x) in_x[v] = 1;
  int sum = 0;
  for (Vertex v : b.x) sum += g.degree(v) - 2;
  b.components = components(g, b.x);
  for (const VertexSet& d : b.components) {
    int boundary = 0;
    for (Vertex u : d) {
      for (Vertex w : g.neighbors(u)) boundary += in_x[w];
    }
    b.boundary.push_back(boundary);
    b.odd.push_back(boundary % 2 == 1);
    b.q += boundary % 2;
  }
  b.deficiency = sum - b.q;
  return b;
}

BarrierResult find_barrier(const Graph& g, std::uint64_t budget) {
  return barrier_search(g, budget, 1, false);
}

BarrierResult find_barrier_parallel(const Graph& g, std::uint64_t budget, int threads) {
  return barrier_search(g, budget, threads, true);
}

BarrierProperties check_properties(const Graph& g, const VertexSet& x) {
  const Barrier b = deficiency(g, x);
  BarrierProperties p;
  p.a = b.is_barrier();
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    for (Vertex u : b.components[i]) owner[u] = static_cast<int>(i);
  }
  p.b = true;
  for (Vertex v : b.x) {
    std::vector<int> hits(b.components.size(), 0);
    for (Vertex u : g.neighbors(v)) {
      if (owner[u] >= 0 && ++hits[owner[u]] > 1) p.b = false;
    }
  }
  p.c = is_stable(g, b.x);
  p.d = std::all_of(b.odd.begin(), b.odd.end(), [](bool o) { return o; });
  int divalent = 0;
  for (Vertex v : b.x) {
    if (g.degree(v) == 2) {
      ++divalent;
    } else {
      p.e_lhs2 += 2 * (g.degree(v) - 3);
    }
  }
  for (int boundary : b.boundary) p.e_lhs2 += boundary - 3;
  p.e_rhs2 = 2 * divalent;
  p.e = p.e_lhs2 < p.e_rhs2;
  return p;
}

NormalizedBarrier normalize_barrier(const Graph& g, const VertexSet& x) {
  if (!is_connected(g)) throw UsageError("normalize_barrier requires a connected graph");
  NormalizedBarrier out;
  out.barrier = deficiency(g, x);
  if (!out.barrier.is_barrier()) throw UsageError("input set is not a barrier (deficiency >= 0)");
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t t = 0; t < out.barrier.x.size(); ++t) {
      VertexSet smaller = out.barrier.x;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(t));
      Barrier cand = deficiency(g, smaller);
      if (cand.is_barrier()) {
        out.removed.push_back(out.barrier.x[t]);
        out.barrier = std::move(cand);
        shrunk = true;
        break;
      }
    }
  }
  out.properties = check_properties(g, out.barrier.x);
  return out;
}

}  // namespace critlab
