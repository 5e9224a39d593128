// Serial reference kernels against their OpenMP versions.
//
//   ./frobflag_bench --benchmark_filter=Grid
//   OMP_NUM_THREADS=4 ./frobflag_bench

#include "frobflag/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace frobflag;

namespace {

void BM_WeightGrid(benchmark::State& state, Execution ex) {
    WeightGridRequest req{RootType::G2, state.range(0), FrobeniusParams(7, 1), {}};
    for (auto _ : state) {
        auto cells = weight_grid(req, ex);
        benchmark::DoNotOptimize(cells.data());
    }
    const auto side = 2 * state.range(0) + 1;
    state.SetItemsProcessed(state.iterations() * side * side);
    state.counters["threads"] = ex == Execution::serial ? 1 : max_threads();
}

void BM_FrobeniusSweep(benchmark::State& state, Execution ex) {
    const std::vector<int> primes{2, 3, 5, 7, 11, 13};
    const std::vector<int> ns{1, 2, 3};
    const auto t = static_cast<RootType>(state.range(0));
    for (auto _ : state) {
        auto cells = frobenius_sweep(t, primes, ns, ex);
        benchmark::DoNotOptimize(cells.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(primes.size() * ns.size()));
    state.counters["threads"] = ex == Execution::serial ? 1 : max_threads();
}

} // namespace

BENCHMARK_CAPTURE(BM_WeightGrid, serial, Execution::serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WeightGrid, parallel, Execution::parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FrobeniusSweep, serial, Execution::serial)
    ->Arg(static_cast<int>(RootType::A2))
    ->Arg(static_cast<int>(RootType::B2))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FrobeniusSweep, parallel, Execution::parallel)
    ->Arg(static_cast<int>(RootType::A2))
    ->Arg(static_cast<int>(RootType::B2))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
