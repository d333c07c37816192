#include <momenta/distributions.hpp>
#include <momenta/fock.hpp>
#include <momenta/random_measures.hpp>
#include <momenta/rational.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace momenta;

namespace {

const FiniteMeasure kSigma{{rat(1, 2), Rat(1), Rat(2), rat(3, 2)}};
const TestFunction kF = {Rat(1), rat(-1, 2), rat(1, 3), rat(2, 5)};

}  // namespace

static void BM_DirichletMomentMultiIndex(benchmark::State& state) {
    const DirichletParams params{{Rat(1), Rat(2), rat(1, 2), Rat(3)}};
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dirichlet_moment_multiindex(params, kF, n));
}
BENCHMARK(BM_DirichletMomentMultiIndex)->Arg(4)->Arg(8);

static void BM_DirichletMomentCycleIndex(benchmark::State& state) {
    const DirichletParams params{{Rat(1), Rat(2), rat(1, 2), Rat(3)}};
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dirichlet_moment_cycleindex(params, kF, n));
}
BENCHMARK(BM_DirichletMomentCycleIndex)->Arg(4)->Arg(8);

static void BM_DfMoment(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(df_moment(kSigma, kF, n));
}
BENCHMARK(BM_DfMoment)->Arg(4)->Arg(8);

static void BM_HumbertSeries(benchmark::State& state) {
    const unsigned D = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(humbert_phi2({Rat(1), Rat(2)}, Rat(3), D));
}
BENCHMARK(BM_HumbertSeries)->Arg(6)->Arg(10);

static void BM_ExtInnerGeneral(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const FiniteMeasure sigma{{rat(1, 2), Rat(1), Rat(2)}};
    const TestFunction phi = {Rat(1), rat(-1, 2), rat(1, 3)};
    const TestFunction psi = {rat(1, 2), Rat(1), rat(-1, 4)};
    const SymTensor a = SymTensor::coherent(3, n, phi);
    const SymTensor b = SymTensor::coherent(3, n, psi);
    for (auto _ : state) benchmark::DoNotOptimize(ext_inner_general(sigma, a, b));
}
BENCHMARK(BM_ExtInnerGeneral)->Arg(3)->Arg(5);

static void BM_SampleGamma(benchmark::State& state) {
    const std::size_t count = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sample_measure(MeasureKind::Gamma, kSigma, seed++, count));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(count));
}
BENCHMARK(BM_SampleGamma)->Arg(1000)->Arg(10000);
