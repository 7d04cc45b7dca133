#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "orlicz/limits.hpp"
#include "orlicz/norm.hpp"

namespace {

orlicz::Discretized random_instance(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::uniform_real_distribution<double> weight(0.01, 5.0);
    std::vector<double> values(n), weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = value(rng);
        weights[i] = weight(rng);
    }
    return {orlicz::DiscreteMeasure::from_weights(weights), orlicz::SampledFunction(values)};
}

void BM_Eval(benchmark::State& state) {
    const auto a = orlicz::YoungFunction::log_bump(2.0, static_cast<double>(state.range(0)));
    double t = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.eval(t));
        t = t < 4.0 ? t * 1.01 : 0.5;
    }
}
BENCHMARK(BM_Eval)->Arg(1)->Arg(50)->Arg(1000);

void BM_Inverse(benchmark::State& state) {
    const auto a = orlicz::YoungFunction::log_bump(1.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse(2.0));
}
BENCHMARK(BM_Inverse)->Arg(1)->Arg(100)->Arg(100000);

void BM_LuxemburgNorm(benchmark::State& state) {
    const auto data = random_instance(static_cast<std::size_t>(state.range(0)));
    const auto a = orlicz::YoungFunction::log_bump(2.0, static_cast<double>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(orlicz::luxemburg_norm(a, data.function, data.measure).value);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LuxemburgNorm)->Args({10, 1})->Args({1000, 1})->Args({1000, 1000})->Args({100000, 10});

void BM_LimitSweep(benchmark::State& state) {
    const auto data = random_instance(200);
    const std::vector<double> schedule{1.0, 10.0, 100.0, 1e3, 1e4, 1e5};
    const orlicz::SweepOptions options{1e-10, static_cast<unsigned>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(orlicz::limit_sweep(data.function, data.measure, 1.0, schedule, options).passed);
}
BENCHMARK(BM_LimitSweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
