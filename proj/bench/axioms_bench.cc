// Serial reference scans against the OpenMP scans on PASS instances, where
// every pair has to be visited.

#include <benchmark/benchmark.h>

#include "bspoly/axioms.h"
#include "bspoly/bisubmod.h"
#include "bspoly/oracle.h"

namespace {

bspoly::PointSet Grid(std::size_t dim, long side) {
  std::vector<bspoly::IntPoint> points;
  bspoly::IntPoint lo(dim), hi(dim);
  for (bspoly::Coord u = 0; u < dim; ++u) hi[u] = side - 1;
  bspoly::BisubFunction box(dim);
  for (bspoly::Coord u = 0; u < dim; ++u) {
    box.set(bspoly::SignedVector::Unit(dim, u, 1), bspoly::ExtendedInt(side - 1));
    box.set(bspoly::SignedVector::Unit(dim, u, -1), bspoly::ExtendedInt(0L));
  }
  return bspoly::PointSet(dim, bspoly::EnumerateIntegerPoints(box));
}

template <bspoly::Verdict (*Check)(const bspoly::PointSet&)>
void BM_Check(benchmark::State& state) {
  const bspoly::PointSet set =
      Grid(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Check(set));
  }
  state.counters["points"] = static_cast<double>(set.size());
}

BENCHMARK_TEMPLATE(BM_Check, bspoly::serial::CheckDeltaExc)->Args({2, 6})->Args({3, 4});
BENCHMARK_TEMPLATE(BM_Check, bspoly::CheckDeltaExc)->Args({2, 6})->Args({3, 4});
BENCHMARK_TEMPLATE(BM_Check, bspoly::serial::CheckBsExc)->Args({2, 4})->Args({3, 3});
BENCHMARK_TEMPLATE(BM_Check, bspoly::CheckBsExc)->Args({2, 4})->Args({3, 3});
BENCHMARK_TEMPLATE(BM_Check, bspoly::serial::CheckHoleFree)->Args({2, 6});
BENCHMARK_TEMPLATE(BM_Check, bspoly::CheckHoleFree)->Args({2, 6});

}  // namespace

BENCHMARK_MAIN();
