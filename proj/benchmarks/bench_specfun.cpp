#include <benchmark/benchmark.h>

#include "weber_orr/kernels.hpp"
#include "weber_orr/specfun.hpp"

using namespace weber_orr;

static void BM_GammaComplex(benchmark::State& state) {
    cplx z(0.3, 4.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_complex(z));
        z += cplx(1e-9, 0.0);
    }
}
BENCHMARK(BM_GammaComplex);

static void BM_BesselJY(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(bessel_jy(0.25, x));
}
// Series branch, just below and above the switchover, and deep asymptotic.
BENCHMARK(BM_BesselJY)->Arg(5)->Arg(160)->Arg(180)->Arg(5000);

static void BM_WeberKernel(benchmark::State& state) {
    const double al = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weber_kernel(0.25, al, 0.5 * al));
}
BENCHMARK(BM_WeberKernel)->Arg(2)->Arg(200);

static void BM_Hypergeometric(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(cplx(0.3, 1.0), 0.7, 1.9, z));
}
BENCHMARK(BM_Hypergeometric)->Arg(30)->Arg(95);

static void BM_LegendreQ(benchmark::State& state) {
    const double z = 1.0 + static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(legendre_q(0.25, cplx(-0.7, 2.0), z));
}
BENCHMARK(BM_LegendreQ)->Arg(1)->Arg(50)->Arg(1000);

static void BM_KernelMellin(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernel_mellin(0.25, cplx(-0.3, 1.0), 2.0, 1.0));
}
BENCHMARK(BM_KernelMellin);

BENCHMARK_MAIN();
