#include <benchmark/benchmark.h>

#include "invpat/core.hpp"
#include "invpat/enumerator.hpp"

namespace {

const invpat::PatternSet& patterns(int which)
{
    static const std::vector<invpat::PatternSet> sets = {
        {invpat::Pattern::parse("021")},
        {invpat::Pattern::parse("100")},
        {invpat::Pattern::parse("120")},
    };
    return sets[static_cast<std::size_t>(which)];
}

void BM_CountSerial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto& avoid = patterns(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invpat::serial::count(n, avoid));
    }
}

void BM_CountParallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto& avoid = patterns(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invpat::omp::count(n, avoid));
    }
    state.counters["threads"] = invpat::omp::max_threads();
}

void BM_TallySerial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const invpat::StatFn fn = [](std::span<const int> e) { return invpat::stats(e).ascents; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(invpat::serial::tally(n, patterns(0), fn));
    }
}

void BM_TallyParallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const invpat::StatFn fn = [](std::span<const int> e) { return invpat::stats(e).ascents; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(invpat::omp::tally(n, patterns(0), fn));
    }
}

} // namespace

BENCHMARK(BM_CountSerial)->ArgsProduct({{8, 9, 10}, {0, 1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->ArgsProduct({{8, 9, 10}, {0, 1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallySerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
