#include <benchmark/benchmark.h>

#include <random>

#include "hankel_lab/asymptotics.hpp"

using namespace hankel_lab;

static void BM_GaussLaguerre(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(int(state.range(0))));
}
BENCHMARK(BM_GaussLaguerre)->Arg(24)->Arg(96);

static void BM_GlobalRule(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(global_rule(WeightModel::bergman(0.0)));
}
BENCHMARK(BM_GlobalRule);

static void BM_SpectrumMonomial(benchmark::State& state) {
    const GramSpec spec = make_gram_spec(WeightModel::bergman(0.0), catalog_symbol("conj_z"), int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(spec));
}
BENCHMARK(BM_SpectrumMonomial)->Arg(16)->Arg(64);

static void BM_SpectrumRotational(benchmark::State& state) {
    const GramSpec spec = make_gram_spec(WeightModel::fock(1.0), catalog_symbol("inv_z_outside"), 64);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(spec));
}
BENCHMARK(BM_SpectrumRotational);

static void BM_GramQuadrature(benchmark::State& state) {
    Symbol f = catalog_symbol("bounded_mix");
    f.rotational.reset();
    f.angular_band.reset();
    const GramSpec spec = make_gram_spec(WeightModel::fock(1.0), f, int(state.range(0)));
    (void)gram_matrix(spec);  // builds the cached rule
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(spec));
}
BENCHMARK(BM_GramQuadrature)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_JacobiEigenvalues(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    HermitianMatrix a(n);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex v(g(rng), i == j ? 0.0 : g(rng));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(a));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_HolomorphicFit(benchmark::State& state) {
    const Symbol f = catalog_symbol("bounded_mix");
    const DiskRule rule = disk_rule();
    for (auto _ : state) benchmark::DoNotOptimize(best_holomorphic_distance(f, Point(0.4, 0.3), 0.5, 24, rule));
}
BENCHMARK(BM_HolomorphicFit);

static void BM_IdaProfile(benchmark::State& state) {
    const WeightModel m = WeightModel::bergman(0.0);
    const Lattice lat = build_lattice(m, 0.2, 0.995);
    const Symbol f = catalog_symbol("conj_z");
    for (auto _ : state) benchmark::DoNotOptimize(ida_profile(f, m, lat, 0.2));
}
BENCHMARK(BM_IdaProfile)->Unit(benchmark::kMillisecond);

static void BM_Rearrangement(benchmark::State& state) {
    WeightedSamples s;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < state.range(0); ++i) {
        s.values.push_back(u(rng));
        s.measures.push_back(0.01 + u(rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(rearrangement(s));
}
BENCHMARK(BM_Rearrangement)->Arg(1000)->Arg(100000);
BENCHMARK_MAIN();
