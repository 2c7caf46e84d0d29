#include <benchmark/benchmark.h>

#include <bohrlab/verify.hpp>

using namespace bohrlab;

static void BM_SeriesEval(benchmark::State& state) {
    FunctionSpec spec{PhiSpec{0.7}};
    spec.target_order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries s = realize(spec);
    const Complex z{0.3, 0.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(s, z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesEval)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_CauchyProduct(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    FunctionSpec a{PhiSpec{0.5}}, b{PhiSpec{0.25}};
    a.target_order = b.target_order = n;
    const TruncatedSeries sa = realize(a), sb = realize(b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cauchy_product(sa, sb, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

static void BM_CircleMax(benchmark::State& state) {
    const TruncatedSeries s = sample_class(SampleClass::B, 7, 6);
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(circle_abs_range(s, 0.4, samples));
    }
}
BENCHMARK(BM_CircleMax)->Arg(64)->Arg(256)->Arg(1024);

static void BM_RadiusSolve(benchmark::State& state) {
    RadiusQuery q;
    q.id = RadiusId::theoremD_rstar;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius(q).value);
    }
}
BENCHMARK(BM_RadiusSolve);

static void BM_RogosinskiRadius(benchmark::State& state) {
    RadiusQuery q;
    q.id = RadiusId::theorem2_Rpmq;
    q.p = 1;
    q.q = 2;
    q.m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius(q).value);
    }
}
BENCHMARK(BM_RogosinskiRadius)->Arg(1)->Arg(5)->Arg(15);

static void BM_CheckTheoremA(benchmark::State& state) {
    CheckOptions opts;
    opts.samples = 16;
    opts.r_points = 10;
    opts.theta_samples = 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_theorem("theoremA", opts).passed);
    }
}
BENCHMARK(BM_CheckTheoremA)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
