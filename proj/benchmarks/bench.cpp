#include <benchmark/benchmark.h>

#include <complex>

#include "latmin/latmin.hpp"

using namespace latmin;

static void BM_eta4(benchmark::State& state) {
    const UhpPoint z{0.3, 1.2};
    for (auto _ : state) benchmark::DoNotOptimize(eta4(z));
}
BENCHMARK(BM_eta4);

static void BM_f_b(benchmark::State& state) {
    const UhpPoint z{0.37, 1.41};
    const MixWeight b{0.35};
    for (auto _ : state) benchmark::DoNotOptimize(f_b(b, z));
}
BENCHMARK(BM_f_b);

static void BM_gradient_series(benchmark::State& state) {
    const UhpPoint z{0.37, 1.41};
    for (auto _ : state) benchmark::DoNotOptimize(gradient_series(SpeciesTag::Zero, z));
}
BENCHMARK(BM_gradient_series);

static void BM_axis_derivative(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(axis_derivative(SpeciesTag::Zero, 1, 1.2));
}
BENCHMARK(BM_axis_derivative);

static void BM_canonicalize(benchmark::State& state) {
    const UhpPoint z{2.35, 0.17};
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(z));
}
BENCHMARK(BM_canonicalize);

static void BM_green_value(benchmark::State& state) {
    const LatticeBasis basis = LatticeBasis::unit_area_from_tau(UhpPoint{0.3, 1.7});
    const std::complex<double> zeta = 0.31 * basis.a1() + 0.17 * basis.a2();
    for (auto _ : state) benchmark::DoNotOptimize(green_value(basis, zeta));
}
BENCHMARK(BM_green_value);

static void BM_half_period_values(benchmark::State& state) {
    const LatticeBasis basis = LatticeBasis::unit_area_from_tau(UhpPoint{0.3, 1.7});
    for (auto _ : state) benchmark::DoNotOptimize(half_period_values(basis));
}
BENCHMARK(BM_half_period_values);

static void BM_q_of_b(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(q_of_b(0.09));
}
BENCHMARK(BM_q_of_b);

static void BM_maximize_f_b(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(maximize_f_b(0.5));
}
BENCHMARK(BM_maximize_f_b);

BENCHMARK_MAIN();
