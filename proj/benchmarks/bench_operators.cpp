#include <momenta/liealg.hpp>
#include <momenta/rational.hpp>

#include <benchmark/benchmark.h>

using namespace momenta;

namespace {

BasisParams two_slot_params(unsigned k) {
    BasisParams params;
    for (unsigned i = 0; i < k; ++i) params.b.push_back(rat(15 + 7 * static_cast<long>(i), 7));
    params.c = rat(52, 7);
    return params;
}

}  // namespace

static void BM_VerifyAction(benchmark::State& state) {
    const unsigned k = 2;
    const unsigned D = static_cast<unsigned>(state.range(0));
    const BasisParams params = two_slot_params(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_action(BasisFamily::HumbertPhi2, "E+1", params, D));
    }
}
BENCHMARK(BM_VerifyAction)->Arg(4)->Arg(6)->Arg(8);

static void BM_Commutator(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const LieOperator up = op_raise(k, 1);
    const LieOperator down = op_lower(k, 1);
    for (auto _ : state) benchmark::DoNotOptimize(commutator(up, down));
}
BENCHMARK(BM_Commutator)->Arg(2)->Arg(4);

static void BM_StructureConstants(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(structure_constants(k));
}
BENCHMARK(BM_StructureConstants)->Arg(1)->Arg(2)->Arg(3);

static void BM_KillingForm(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const StructureConstants sc = structure_constants(k);
    for (auto _ : state) benchmark::DoNotOptimize(killing_nondegeneracy(sc));
}
BENCHMARK(BM_KillingForm)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
