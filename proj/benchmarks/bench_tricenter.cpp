#include <benchmark/benchmark.h>

#include "tricenter/catalog.hpp"
#include "tricenter/curves.hpp"
#include "tricenter/inverse_design.hpp"
#include "tricenter/sampling.hpp"

using namespace tricenter;

static void BM_CenterPoint(benchmark::State& state) {
  const Triangle T = canonical_placement({3, 4, 5});
  const CenterFunction& psi = catalog_center("X13");
  for (auto _ : state) benchmark::DoNotOptimize(center_point(psi, T));
}
BENCHMARK(BM_CenterPoint);

static void BM_TraceAliquot(benchmark::State& state) {
  const Triangle T = canonical_placement({3, 4, 5});
  const CenterFunction& psi = catalog_center("X15");
  const TriangleFamily F = builtin("aliquot");
  const Grid grid{-0.5, 1.5, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(trace_center(T, psi, F, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TraceAliquot)->Arg(512)->Arg(4096);

static void BM_SemiInvariance(benchmark::State& state) {
  Rng rng(0);
  std::vector<Triangle> tris;
  for (int i = 0; i < 20; ++i) tris.push_back(random_non_equilateral_triangle(rng));
  const CenterFunction psi = omega_center(OmegaSpec::parse("xi:2:5"));
  const TriangleFamily F = builtin("nedian");
  for (auto _ : state) benchmark::DoNotOptimize(verify_semi_invariance(psi, F, tris));
}
BENCHMARK(BM_SemiInvariance)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  const TriangleFamily F = builtin("nedian");
  for (auto _ : state) {
    const FamilyDecomposition d = decompose(F);
    benchmark::DoNotOptimize(d.sigma(Real(0.3)) + d.tau(Real(0.3)));
  }
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMicrosecond);

static void BM_InverseDesign(benchmark::State& state) {
  const PolarTarget target = rose_target(1, 4);
  const Triangle T = canonical_placement({3, 4, 5});
  const Grid grid{target.domain.lo, target.domain.hi, 1001};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_target_reproduction(catalog_center("X13"), target, T, grid).residual);
}
BENCHMARK(BM_InverseDesign)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
