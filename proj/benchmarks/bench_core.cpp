#include <benchmark/benchmark.h>

#include <random>

#include "mpberg/allowability.hpp"
#include "mpberg/deck_group.hpp"
#include "mpberg/numeric_verify.hpp"
#include "mpberg/presets.hpp"
#include "mpberg/smith.hpp"

using namespace mpberg;

namespace {

IntMatrix random_matrix(std::uint64_t seed, std::size_t n, long lo, long hi) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void BM_det_bareiss(benchmark::State& state) {
    const IntMatrix m = random_matrix(1, state.range(0), -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_det_bareiss)->Arg(4)->Arg(6)->Arg(8);

void BM_adjugate(benchmark::State& state) {
    const IntMatrix m = random_matrix(2, state.range(0), -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(adjugate(m));
}
BENCHMARK(BM_adjugate)->Arg(4)->Arg(6);

void BM_smith_normal_form(benchmark::State& state) {
    const IntMatrix m = random_matrix(3, state.range(0), -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(6)->Arg(8);

void BM_validate_domain(benchmark::State& state) {
    const IntMatrix b = elementary_signature_matrix({2, 4, 6, 8});
    for (auto _ : state)
        benchmark::DoNotOptimize(MonomialPolyhedron::validate(b));
}
BENCHMARK(BM_validate_domain);

void BM_build_group(benchmark::State& state) {
    // order 180 group
    IntMatrix a(2, 2);
    a(0, 0) = 12;
    a(0, 1) = 3;
    a(1, 0) = 0;
    a(1, 1) = 15;
    for (auto _ : state) benchmark::DoNotOptimize(DeckGroup::build(a));
}
BENCHMARK(BM_build_group);

void BM_find_witness(benchmark::State& state) {
    const MonomialPolyhedron p =
        MonomialPolyhedron::validate(elementary_signature_matrix({6, 10, 15}));
    for (auto _ : state) benchmark::DoNotOptimize(find_witness(p));
}
BENCHMARK(BM_find_witness);

void BM_s2_box(benchmark::State& state) {
    const MonomialPolyhedron p =
        MonomialPolyhedron::validate(chain_matrix({2, 1, 2}));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_s2_box(p.exponent_matrix(),
                                                  state.range(0)));
}
BENCHMARK(BM_s2_box)->Arg(2)->Arg(4);

void BM_mc_integral(benchmark::State& state) {
    const MonomialPolyhedron p =
        MonomialPolyhedron::from_rational(hartogs_matrix(2, 3));
    const MultiIndex beta = multi_index_of({0, -2});
    McConfig cfg;
    cfg.samples = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 9;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_integral(p, beta, Rational(2), cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_mc_integral)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_kernel_series(benchmark::State& state) {
    const MonomialPolyhedron p =
        MonomialPolyhedron::from_rational(hartogs_matrix(1, 1));
    const ComplexPoint z = {{0.3, 0.1}, {0.6, 0.0}};
    const ComplexPoint w = {{0.25, -0.1}, {0.55, 0.1}};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_series(p, z, w, 1e-9));
}
BENCHMARK(BM_kernel_series);

}  // namespace

BENCHMARK_MAIN();
