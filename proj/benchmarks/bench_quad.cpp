#include <cmath>

#include <benchmark/benchmark.h>

#include "weber_orr/mellin.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/specfun.hpp"
#include "weber_orr/weber.hpp"

using namespace weber_orr;

static void BM_Adaptive(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_adaptive([](double x) { return cplx(std::exp(-x * x) * std::cos(5.0 * x), 0.0); }, -4.0, 4.0, 1e-12));
    }
}
BENCHMARK(BM_Adaptive);

static void BM_DoubleExponential(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_de([](double x) { return cplx(std::pow(x, -0.9) * std::log1p(x), 0.0); },
                                              0.0, 1.0, 1e-12));
    }
}
BENCHMARK(BM_DoubleExponential);

static void BM_Oscillatory(benchmark::State& state) {
    TruncationPolicy policy;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_oscillatory([](double x) { return cplx(std::sin(x) / std::sqrt(x), 0.0); }, 1.0, 0.0, 1e-10, policy));
    }
}
BENCHMARK(BM_Oscillatory);

static void BM_VerticalLine(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_vertical_line([](cplx s) { return gamma_complex(s); }, VerticalLine{0.5, 16.0}, 1e-12));
    }
}
BENCHMARK(BM_VerticalLine);

static void BM_WeberApply(benchmark::State& state) {
    TransformConfig cfg;
    const auto g = RadialFunction::from_expression("x^0.5*exp(-x)", {0.5, DecayHint::Tail::exponential, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(weber_apply(g, cfg, 2.0));
}
BENCHMARK(BM_WeberApply)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
