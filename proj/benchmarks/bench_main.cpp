#include <benchmark/benchmark.h>

#include "matchorient/catalog.hpp"
#include "matchorient/matching.hpp"
#include "matchorient/orientation_solver.hpp"
#include "matchorient/structure.hpp"
#include "matchorient/wagner.hpp"

using namespace matchorient;

static void BM_EnumerateMatchingsPetersen(benchmark::State& state) {
    const Graph& g = catalog_find("petersen")->graph;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(g));
}
BENCHMARK(BM_EnumerateMatchingsPetersen);

static void BM_AlternatingCyclesWagnerRim(benchmark::State& state) {
    const CatalogEntry& w = *catalog_find("wagner");
    const OneFactor& f2 = catalog_factor(w, "f2");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_alternating_cycles(w.graph, f2));
}
BENCHMARK(BM_AlternatingCyclesWagnerRim);

static void BM_SolveOrientationWagnerRim(benchmark::State& state) {
    const CatalogEntry& w = *catalog_find("wagner");
    ParitySystem sys = build_parity_system(w.graph, catalog_factor(w, "f2"));
    for (auto _ : state) benchmark::DoNotOptimize(solve_orientation(sys, Target::even));
}
BENCHMARK(BM_SolveOrientationWagnerRim);

static void BM_PfaffianPetersen(benchmark::State& state) {
    const Graph& g = catalog_find("petersen")->graph;
    for (auto _ : state) benchmark::DoNotOptimize(is_pfaffian(g));
}
BENCHMARK(BM_PfaffianPetersen);

static void BM_TightCutsPetersen(benchmark::State& state) {
    const Graph& g = catalog_find("petersen")->graph;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tight_cuts(g));
}
BENCHMARK(BM_TightCutsPetersen);

static void BM_WagnerMembershipWStar(benchmark::State& state) {
    const Graph& g = catalog_find("w_star")->graph;
    for (auto _ : state) benchmark::DoNotOptimize(wagner_membership(g));
}
BENCHMARK(BM_WagnerMembershipWStar);

BENCHMARK_MAIN();
