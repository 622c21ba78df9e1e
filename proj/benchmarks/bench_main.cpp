#include <benchmark/benchmark.h>

#include <lbs/classifier.hpp>
#include <lbs/determinant.hpp>
#include <lbs/integrals.hpp>
#include <lbs/oracle.hpp>
#include <lbs/solver.hpp>

namespace {

void bm_band_integrals(benchmark::State& state) {
    const lbs::Quasimomentum k(0.7);
    double z = -0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::band_integrals(k, z));
        z -= 1e-9;
    }
}
BENCHMARK(bm_band_integrals);

void bm_band_integrals_quadrature(benchmark::State& state) {
    const lbs::Quasimomentum k(0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::band_integrals_quadrature(k, -0.3));
    }
}
BENCHMARK(bm_band_integrals_quadrature);

void bm_fredholm_det(benchmark::State& state) {
    const lbs::Couplings c(-3, -4, -2);
    const lbs::Quasimomentum k(0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::fredholm_det(c, k, -1.7));
    }
}
BENCHMARK(bm_fredholm_det);

void bm_predicted_counts(benchmark::State& state) {
    const lbs::Couplings c(-3, -4, -2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::predicted_counts(c));
    }
}
BENCHMARK(bm_predicted_counts);

void bm_find_eigenvalues(benchmark::State& state) {
    const lbs::Couplings c(-3, -4, -2);
    const lbs::Quasimomentum k(0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::find_eigenvalues(c, k));
    }
}
BENCHMARK(bm_find_eigenvalues)->Unit(benchmark::kMicrosecond);

void bm_oracle(benchmark::State& state) {
    const lbs::Couplings c(-3, -4, -2);
    const lbs::Quasimomentum k(0.9);
    lbs::DiscretizationConfig cfg;
    cfg.n_points = static_cast<int>(state.range(0));
    cfg.route = static_cast<lbs::EigenRoute>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lbs::oracle_spectrum(c, k, cfg));
    }
}
BENCHMARK(bm_oracle)
    ->ArgNames({"n", "route"})
    ->Args({256, 0})
    ->Args({256, 1})
    ->Args({512, 0})
    ->Args({512, 1})
    ->Args({2048, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
