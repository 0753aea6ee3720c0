#include <benchmark/benchmark.h>

#include "nck/charring.hpp"
#include "nck/freealg.hpp"
#include "nck/freelie.hpp"
#include "nck/ncdgq.hpp"
#include "nck/ncvirt.hpp"
#include "nck/presets.hpp"

namespace {

nck::SuperChar bench_char() {
    nck::Character even(2), odd(2);
    even.add_term({1, 0}, nck::Int(1));
    even.add_term({0, 1}, nck::Int(1));
    even.add_term({0, 0}, nck::Int(1));
    odd.add_term({1, 1}, nck::Int(1));
    odd.add_term({-1, 0}, nck::Int(1));
    return nck::SuperChar(even, odd);
}

void bm_schur_super(benchmark::State& state) {
    nck::SuperChar g = bench_char();
    nck::Partition lam({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(schur_super(lam, g));
}
BENCHMARK(bm_schur_super);

void bm_lie_table(benchmark::State& state) {
    nck::SuperChar g = bench_char();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nck::lie_char_table(g, n));
}
BENCHMARK(bm_lie_table)->Arg(4)->Arg(5);

void bm_bracket_layers(benchmark::State& state) {
    nck::SuperChar g = bench_char();
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nck::s_l_plus_truncated(g, d));
}
BENCHMARK(bm_bracket_layers)->Arg(1)->Arg(2);

void bm_q_squared_plane(benchmark::State& state) {
    nck::NcdgData d = nck::presets::p2_ncdg();
    for (auto _ : state) benchmark::DoNotOptimize(nck::check_q_squared(d));
}
BENCHMARK(bm_q_squared_plane);

void bm_filtration(benchmark::State& state) {
    nck::GradedGenSet g;
    g.generators = {{"x", 0}, {"th", 1}};
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(nck::nc_filtration_dims(g, n, n - 1, 1000000));
}
BENCHMARK(bm_filtration)->Arg(4)->Arg(6);

void bm_c3_display(benchmark::State& state) {
    for (auto _ : state) {
        nck::presets::C3Example ex = nck::presets::c3();
        benchmark::DoNotOptimize(nck::rat_equal(nck::ncvir_class(ex.ot, 1), ex.display));
    }
}
BENCHMARK(bm_c3_display);

} // namespace

BENCHMARK_MAIN();
