#include <benchmark/benchmark.h>

#include <random>

#include "helly/curves.hpp"
#include "helly/fitting.hpp"
#include "helly/helly.hpp"
#include "helly/intersections.hpp"

using namespace helly;

static void BM_Gauge(benchmark::State& state) {
    const CurveSpec c = superellipse(3, 1, 1);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<Point> pts(1024);
    for (Point& p : pts) p = {u(rng), u(rng)};
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gauge(c, pts[i++ & 1023]));
}
BENCHMARK(BM_Gauge);

static void BM_HomothetThroughThree(benchmark::State& state) {
    const CurveSpec c = state.range(0) ? superellipse(3, 1, 1) : ellipse(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(homothet_through_three(c, {0, 0}, {1.2, 0.3}, {0.4, 1.1}));
}
BENCHMARK(BM_HomothetThroughThree)->Arg(0)->Arg(1);

static void BM_PairIntersections(benchmark::State& state) {
    const CurveSpec c = ellipse(2, 1);
    PlacedCurve a{c, {}}, b{c, {1.3, {0.7, 0.4}}};
    for (auto _ : state) benchmark::DoNotOptimize(curve_pair_intersections(a, b));
}
BENCHMARK(BM_PairIntersections);

static void BM_HellyCheck(benchmark::State& state) {
    std::mt19937_64 rng(7);
    FamilySpec f = random_family(circle(1), {static_cast<std::size_t>(state.range(0))}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(helly_check(f, 3));
}
BENCHMARK(BM_HellyCheck)->Arg(5)->Arg(8);
BENCHMARK_MAIN();
