#include <momenta/bell.hpp>
#include <momenta/moments.hpp>
#include <momenta/rational.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace momenta;

namespace {

std::vector<Rat> ramp(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(rat(static_cast<long>(i) + 1, 3));
    return out;
}

}  // namespace

static void BM_BellComplete(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bell_complete(n));
}
BENCHMARK(BM_BellComplete)->Arg(6)->Arg(10)->Arg(14);

static void BM_CycleIndex(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cycle_index_sn(n));
}
BENCHMARK(BM_CycleIndex)->Arg(6)->Arg(10)->Arg(14);

static void BM_BellEvaluate(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const SparsePoly poly = bell_complete(n);
    const std::vector<Rat> x = ramp(n);
    for (auto _ : state) benchmark::DoNotOptimize(poly.evaluate(x));
}
BENCHMARK(BM_BellEvaluate)->Arg(8)->Arg(12);

static void BM_PatternInventory(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const std::vector<Rat> s = ramp(4);
    for (auto _ : state) benchmark::DoNotOptimize(pattern_inventory(n, s));
}
BENCHMARK(BM_PatternInventory)->Arg(8)->Arg(12);

static void BM_MomentsToCumulants(benchmark::State& state) {
    const std::vector<Rat> raw = ramp(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(moments_to_cumulants(raw));
}
BENCHMARK(BM_MomentsToCumulants)->Arg(8)->Arg(16);
