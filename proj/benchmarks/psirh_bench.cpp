#include <benchmark/benchmark.h>

#include "psirh/champions.hpp"
#include "psirh/criteria.hpp"
#include "psirh/primorial.hpp"
#include "psirh/sieve.hpp"
#include "psirh/theta.hpp"

namespace {

void BM_SieveRange(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        psirh::for_each_prime(0, hi, [&](std::uint64_t) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveRange)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_ThetaStream(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psirh::theta_at(n));
    }
}
BENCHMARK(BM_ThetaStream)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psirh::scan_exceptions(psirh::CriterionKind::dedekind_f, 2, hi));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_Superabundant(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psirh::generate_superabundant(limit));
    }
}
BENCHMARK(BM_Superabundant)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_PrimorialBounds(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(psirh::check_primorial_bounds(2263, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_PrimorialBounds)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
