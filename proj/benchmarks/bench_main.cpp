#include <benchmark/benchmark.h>

#include "finsum/criteria.hpp"
#include "finsum/fs_core.hpp"
#include "finsum/search.hpp"

using namespace finsum;

namespace {

void BM_FsEnumerate(benchmark::State& state) {
    FsSpec spec = sparse_generators(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto values = fs_enumerate(spec);
        benchmark::DoNotOptimize(values);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FsEnumerate)->DenseRange(4, 10, 2)->Complexity();

void BM_MaxApScan(benchmark::State& state) {
    auto values = fs_enumerate(sparse_generators(3, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto result = max_ap_length(values);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_MaxApScan)->DenseRange(4, 7, 1);

void BM_ZeroSumSubsets(benchmark::State& state) {
    LinearSystem sys;
    sys.rows = 2;
    sys.cols = static_cast<int>(state.range(0));
    sys.entries.resize(static_cast<std::size_t>(2 * sys.cols));
    for (int col = 0; col < sys.cols; ++col) {
        int a = (col % 5) - 2;
        int b = (col % 3) - 1;
        sys.at(0, col) = a == 0 ? 1 : a;
        sys.at(1, col) = b == 0 ? -1 : b;
    }
    for (auto _ : state) {
        auto subsets = zero_sum_subsets(sys);
        benchmark::DoNotOptimize(subsets);
    }
}
BENCHMARK(BM_ZeroSumSubsets)->DenseRange(10, 18, 4);

void BM_VdwHolds(benchmark::State& state) {
    auto ground = GroundSet::interval(1, state.range(0));
    SearchOptions options;
    options.workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto verdict = forall_colorings(ground, 2, Target::ap(3), options);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_VdwHolds)->Args({9, 1})->Args({9, 4})->Args({10, 1})->Args({10, 4});

void BM_PseudoNeat(benchmark::State& state) {
    auto eq = ShiftInvariantEq::make({BigInt(2), BigInt(3)}, {BigInt(5)});
    for (auto _ : state) {
        auto result = check_pseudo_neat(eq, 5, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_PseudoNeat)->DenseRange(1, 3, 1);

}  // namespace

BENCHMARK_MAIN();
