#include <benchmark/benchmark.h>

#include <map>

#include "wiener/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

const std::vector<wiener::Graph>& corpus(int n) {
    static std::map<int, std::vector<wiener::Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, wiener::unicyclic_graphs(n)).first;
    return it->second;
}

void BM_scan_serial(benchmark::State& state) {
    const auto& graphs = corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wiener::scan_stats_serial(graphs));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

void BM_scan_parallel(benchmark::State& state) {
    const auto& graphs = corpus(static_cast<int>(state.range(0)));
#ifdef _OPENMP
    int jobs = omp_get_max_threads();
#else
    int jobs = 1;
#endif
    for (auto _ : state) benchmark::DoNotOptimize(wiener::scan_stats_parallel(graphs, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

}  // namespace

BENCHMARK(BM_scan_serial)->Arg(10)->Arg(11)->Arg(12);
BENCHMARK(BM_scan_parallel)->Arg(10)->Arg(11)->Arg(12);

BENCHMARK_MAIN();
