#include <benchmark/benchmark.h>

#include "finhilbert/rearrange.hpp"
#include "finhilbert/transform.hpp"

namespace {

void BM_fht_spectral(benchmark::State& state) {
    fht::SpectralFunction f{fht::WeightClass::InvSqrt, {}};
    for (int i = 0; i < state.range(0); ++i) f.coeffs.push_back(1.0 / (i + 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(fht::fht_spectral(f));
}
BENCHMARK(BM_fht_spectral)->Arg(16)->Arg(64)->Arg(256);

void BM_fht_point(benchmark::State& state) {
    fht::RealFunction f;
    f.eval = [](double t) { return 1.0 / (2.0 - t); };
    fht::QuadratureOptions opt;
    opt.panel_depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fht::fht_point(f, 0.3, opt));
}
BENCHMARK(BM_fht_point)->Arg(20)->Arg(40)->Arg(60);

void BM_rearrangement(benchmark::State& state) {
    fht::RealFunction f;
    f.eval = [](double x) { return 1.0 + 0.5 * x + 0.25 * x * x; };
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fht::rearrangement(f, res));
}
BENCHMARK(BM_rearrangement)->Arg(256)->Arg(1024)->Arg(4096);

void BM_norm_llogl(benchmark::State& state) {
    fht::RealFunction f;
    f.eval = [](double x) { return 1.0 + 0.5 * x; };
    const auto prof = fht::rearrangement(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fht::norm_llogl(prof));
}
BENCHMARK(BM_norm_llogl)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
