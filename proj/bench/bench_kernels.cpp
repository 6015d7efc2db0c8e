#include <benchmark/benchmark.h>

#include <algorithm>

#include "orbikit/kernels.hpp"
#include "orbikit/quotient_sim.hpp"

using namespace orbikit;

namespace {

const IntMatrix2 kA(1, -1, 1, 2);

void BM_LefschetzSerial(benchmark::State& state) {
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lefschetz_dets_serial(kA, horizon));
}

void BM_LefschetzParallel(benchmark::State& state) {
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lefschetz_dets_parallel(kA, horizon));
}

// A^n - I for the 236 fixture; |det| grows like 3^n.
SmithForm twisted_form(int n) { return smith_normal_form(kA.pow(n) - IntMatrix2::identity()); }

void BM_TorsionSerial(benchmark::State& state) {
  const auto snf = twisted_form(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::torsion_points_serial(snf.right, snf.s1, snf.s2));
  }
  state.SetItemsProcessed(state.iterations() * snf.s1 * snf.s2);
}

void BM_TorsionParallel(benchmark::State& state) {
  const auto snf = twisted_form(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::torsion_points_parallel(snf.right, snf.s1, snf.s2));
  }
  state.SetItemsProcessed(state.iterations() * snf.s1 * snf.s2);
}

// The union of twisted solution sets is R-invariant, so orbits are defined.
std::vector<TorusPoint> invariant_points(int n) {
  const auto r = deck_matrix(OrbifoldCase::TwoThreeSix);
  std::vector<TorusPoint> pts;
  for (const auto& sols : twisted_solutions(kA, r, n, kDefaultEnumerationCap)) {
    pts.insert(pts.end(), sols.begin(), sols.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void BM_OrbitsSerial(benchmark::State& state) {
  const auto pts = invariant_points(static_cast<int>(state.range(0)));
  const auto r = deck_matrix(OrbifoldCase::TwoThreeSix).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_orbits_serial(pts, r));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}

void BM_OrbitsParallel(benchmark::State& state) {
  const auto pts = invariant_points(static_cast<int>(state.range(0)));
  const auto r = deck_matrix(OrbifoldCase::TwoThreeSix).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_orbits_parallel(pts, r));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}

}  // namespace

BENCHMARK(BM_LefschetzSerial)->Arg(50)->Arg(400);
BENCHMARK(BM_LefschetzParallel)->Arg(50)->Arg(400);
BENCHMARK(BM_TorsionSerial)->Arg(8)->Arg(11);
BENCHMARK(BM_TorsionParallel)->Arg(8)->Arg(11);
BENCHMARK(BM_OrbitsSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_OrbitsParallel)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
