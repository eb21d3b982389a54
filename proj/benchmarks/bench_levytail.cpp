#include <benchmark/benchmark.h>

#include <vector>

#include "levytail/fractal.hpp"
#include "levytail/scaling.hpp"
#include "levytail/special.hpp"
#include "levytail/stable.hpp"
#include "levytail/synth.hpp"

using namespace levytail;

namespace {

const StableParams kSymmetric{1.5, 0.0, 1.0, 0.0};

void BM_Cf(benchmark::State& state) {
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf(kSymmetric, t));
        t += 1e-6;
    }
}
BENCHMARK(BM_Cf);

void BM_PdfNumeric(benchmark::State& state) {
    InversionConfig cfg;
    cfg.use_closed_forms = false;
    double x = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdf(kSymmetric, x, cfg));
        x = (x > 5.0) ? -5.0 : x + 0.1;
    }
}
BENCHMARK(BM_PdfNumeric);

void BM_CdfNumeric(benchmark::State& state) {
    InversionConfig cfg;
    cfg.use_closed_forms = false;
    double x = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdf(kSymmetric, x, cfg));
        x = (x > 5.0) ? -5.0 : x + 0.1;
    }
}
BENCHMARK(BM_CdfNumeric);

void BM_NormalCdf(benchmark::State& state) {
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_cdf(x));
        x = (x > 10.0) ? -10.0 : x + 1e-4;
    }
}
BENCHMARK(BM_NormalCdf);

void BM_SemistableCf(benchmark::State& state) {
    const SemiStableSpec spec{2.0, 1.0, 1.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(semistable_cf(spec, 1.0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SemistableCf)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_MeanRange(benchmark::State& state) {
    const auto series = gaussian_walk(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mean_range(series, 64));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeanRange)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_HurstPipeline(benchmark::State& state) {
    const auto series = gaussian_walk(1 << 14, 1);
    const auto plan = WindowPlan::default_for(series.size());
    for (auto _ : state) {
        auto est = fit_hurst(scaling_curve(series, plan).points);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_HurstPipeline);

void BM_BoxCount(benchmark::State& state) {
    const auto f = fbm({1 << 14, 0.5}, 1);
    const double delta = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(box_count(f.series, delta));
}
BENCHMARK(BM_BoxCount)->RangeMultiplier(4)->Range(8, 2048);

void BM_BoxDimension(benchmark::State& state) {
    const auto f = fbm({1 << 14, 0.5}, 1);
    const auto grid = BoxGridConfig::default_for(f.series.size());
    for (auto _ : state) benchmark::DoNotOptimize(box_dimension(f.series, grid));
}
BENCHMARK(BM_BoxDimension);

void BM_Fbm(benchmark::State& state) {
    const FbmSpec spec{static_cast<std::size_t>(state.range(0)), 0.7};
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(fbm(spec, ++seed));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fbm)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_StableSample(benchmark::State& state) {
    Seed seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(stable_sample(kSymmetric, 1 << 12, ++seed));
    state.SetItemsProcessed(state.iterations() * (1 << 12));
}
BENCHMARK(BM_StableSample);

}  // namespace

BENCHMARK_MAIN();
