// Serial reference kernels against their OpenMP counterparts.
#include <fstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "critlab/criticality.hpp"
#include "critlab/even_factor.hpp"
#include "critlab/families.hpp"
#include "critlab/harness.hpp"

using namespace critlab;
using critlab::families::petersen;

namespace {

// Generalized Petersen graph GP(n, 2): cubic, bridgeless, so the barrier
// search has to exhaust every proper subset.
Graph gp2(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    es.push_back(Edge::make(i, (i + 1) % n));
    es.push_back(Edge::make(i, n + i));
    es.push_back(Edge::make(n + i, n + (i + 2) % n));
  }
  return Graph(2 * n, es);
}

int threads() { return std::max(2, omp_get_max_threads()); }

void BM_barrier_serial(benchmark::State& st) {
  const Graph g = gp2(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_barrier(g, UINT64_MAX).subsets);
}

void BM_barrier_parallel(benchmark::State& st) {
  const Graph g = gp2(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_barrier_parallel(g, UINT64_MAX, threads()).subsets);
  st.counters["threads"] = threads();
}

void BM_critical(benchmark::State& st) {
  const Graph g = petersen().induced({1, 2, 3, 4, 5, 6, 7, 8, 9});
  CriticalityOptions opts;
  opts.threads = st.range(0) == 0 ? 1 : threads();
  for (auto _ : st) benchmark::DoNotOptimize(is_k_critical(g, opts).nodes);
  st.counters["threads"] = opts.threads;
}

std::vector<std::string> fixture() {
  std::ifstream in(CRITLAB_FIXTURES "/connected_le7.g6");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

void BM_harness(benchmark::State& st) {
  JobSpec spec;
  spec.command = Subcommand::theorem2_xcheck;
  spec.graphs = fixture();
  spec.jobs = st.range(0) == 0 ? 1 : threads();
  for (auto _ : st) benchmark::DoNotOptimize(run(spec).summary.processed);
  st.counters["jobs"] = spec.jobs;
}

}  // namespace

BENCHMARK(BM_barrier_serial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_barrier_parallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_critical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_harness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
