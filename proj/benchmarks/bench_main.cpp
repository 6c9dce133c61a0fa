#include <benchmark/benchmark.h>

#include "gsup/chords.hpp"
#include "gsup/regions.hpp"
#include "gsup/supports.hpp"

using namespace gsup;

namespace {

GraphSystem rect_system(int side, int regions, std::uint64_t seed) {
    return random_rectangle_system({side, side, GridTopology::plane}, regions, seed);
}

void BM_FaceTrace(benchmark::State& state) {
    auto g = grid_host({static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                        GridTopology::torus});
    for (auto _ : state) benchmark::DoNotOptimize(g.face_trace());
}
BENCHMARK(BM_FaceTrace)->Arg(4)->Arg(8)->Arg(16);

void BM_CrossFreeScan(benchmark::State& state) {
    auto sys = rect_system(7, static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(is_cross_free(sys));
}
BENCHMARK(BM_CrossFreeScan)->Arg(4)->Arg(8);

void BM_ChordSet(benchmark::State& state) {
    CycleSystem cs;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) cs.cycle.push_back(i);
    // nested two-run families {2f, n-1-2f}: aabb patterns only, so every
    // pair is abab-free while every family needs a chord
    for (int f = 0; f < n / 4; ++f)
        cs.families["F" + std::to_string(f)] = {2 * f, n - 1 - 2 * f};
    if (!is_abab_free(cs)) state.SkipWithError("generator produced an interleaving");
    for (auto _ : state) benchmark::DoNotOptimize(chord_set(cs));
}
BENCHMARK(BM_ChordSet)->Arg(16)->Arg(32);

void BM_PrimalSupport(benchmark::State& state) {
    auto sys = rect_system(static_cast<int>(state.range(0)), 6, 23);
    int i = 0;
    for (VertexId v : sys.host.vertices()) sys.coloring[v] = (i++ % 2) ? Color::red : Color::blue;
    for (auto _ : state) benchmark::DoNotOptimize(primal_support(sys));
}
BENCHMARK(BM_PrimalSupport)->Arg(5)->Arg(7);

void BM_DualSupport(benchmark::State& state) {
    auto sys = rect_system(static_cast<int>(state.range(0)), 6, 29);
    for (auto _ : state) benchmark::DoNotOptimize(dual_support(sys));
}
BENCHMARK(BM_DualSupport)->Arg(5)->Arg(7);

void BM_IntersectionSupport(benchmark::State& state) {
    GridSpec grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                  GridTopology::plane};
    auto hr = random_rectangles(grid, 5, 31, "H");
    auto kr = random_rectangles(grid, 3, 37, "K");
    auto sys = build_system(grid, hr, kr).system;
    for (auto _ : state) benchmark::DoNotOptimize(intersection_support(sys));
}
BENCHMARK(BM_IntersectionSupport)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
