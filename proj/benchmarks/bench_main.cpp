#include <benchmark/benchmark.h>

#include "gpf/bounds.hpp"
#include "gpf/construction.hpp"
#include "gpf/progressions.hpp"
#include "gpf/search.hpp"

namespace {

void BM_EnumerateGps(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::enumerate_gps(n, 3));
}
BENCHMARK(BM_EnumerateGps)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_BuildFamily(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::build_family(n, k));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_BuildFamily)->Args({100'000, 3})->Args({1'000'000, 3})->Args({1'000'000, 5});

void BM_VerifyFamily(benchmark::State& state) {
    const auto family = gpf::build_family(static_cast<std::uint64_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(gpf::verify_family(family));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.blocks.size()));
}
BENCHMARK(BM_VerifyFamily)->Arg(100'000)->Arg(1'000'000);

void BM_ExactSearch(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::max_gp_free_exact(n, 3, {}));
}
BENCHMARK(BM_ExactSearch)->Arg(40)->Arg(70)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::greedy_gp_free(n, 3));
}
BENCHMARK(BM_Greedy)->Arg(10'000)->Arg(100'000);

void BM_SquarefreeSieve(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::squarefree_set(n));
}
BENCHMARK(BM_SquarefreeSieve)->Arg(1'000'000);

void BM_ImprovedBound(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpf::improved_bound(k));
}
BENCHMARK(BM_ImprovedBound)->Arg(3)->Arg(17)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
