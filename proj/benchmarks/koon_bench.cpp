#include <benchmark/benchmark.h>

#include <koon/lifetime.hpp>
#include <koon/order_statistics.hpp>
#include <koon/residual.hpp>
#include <koon/system.hpp>

namespace {

koon::SystemSpec mixed_system(long n, long k) {
    using DL = koon::DiscreteLifetime;
    koon::SystemSpec sys;
    sys.n = n;
    sys.k = k;
    for (long j = 0; j < n; ++j)
        sys.active.push_back(DL::geometric(0.15 + 0.6 * double(j) / double(n)));
    sys.standby = DL::geometric(0.1);
    return sys;
}

void BM_category_sum(benchmark::State& state) {
    const long n = state.range(0);
    koon::CategoryWeights w;
    for (long j = 0; j < n; ++j) {
        w.below.push_back(0.3);
        w.exact.push_back(0.2);
        w.above.push_back(0.5);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(koon::category_sum(w, n / 3, n / 3));
    state.SetComplexityN(n);
}
BENCHMARK(BM_category_sum)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_reliability_curve(benchmark::State& state) {
    const koon::SystemSpec sys = mixed_system(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(koon::reliability_curve(sys, 200));
}
BENCHMARK(BM_reliability_curve)->Arg(5)->Arg(10)->Arg(20);

void BM_expected_T(benchmark::State& state) {
    const koon::SystemSpec sys = mixed_system(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(koon::expected_T(sys, 1e-4).value);
}
BENCHMARK(BM_expected_T)->Arg(5)->Arg(10);

void BM_usual_mrl(benchmark::State& state) {
    const koon::SystemSpec sys = mixed_system(10, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(koon::usual_mrl(sys, state.range(0), 1e-4).value);
}
BENCHMARK(BM_usual_mrl)->Arg(0)->Arg(10)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
