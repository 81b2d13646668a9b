#include <benchmark/benchmark.h>

#include "linkvol/conway.hpp"
#include "linkvol/diagram.hpp"
#include "linkvol/solver.hpp"
#include "linkvol/triangulation.hpp"

using namespace linkvol;

static void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        auto sym = parse("8*(2,-2).(2,-2)");
        benchmark::DoNotOptimize(sym);
    }
}
BENCHMARK(BM_Parse);

static void BM_Diagram(benchmark::State& state) {
    auto sym = parse("8*2 0.2 0");
    for (auto _ : state) {
        auto d = build_diagram(sym);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Diagram);

static void BM_Triangulate(benchmark::State& state) {
    auto d = build_diagram(parse("8*2 0.2 0"));
    for (auto _ : state) {
        auto t = octahedral_triangulation(d);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Triangulate);

static void BM_Volume(benchmark::State& state) {
    std::string sym = state.range(0) == 0 ? "2 2" : (state.range(0) == 1 ? "6*" : "8*2 0.2 0");
    auto d = build_diagram(parse(sym));
    for (auto _ : state) {
        auto r = link_volume(d);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Volume)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
