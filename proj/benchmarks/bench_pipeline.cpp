#include <benchmark/benchmark.h>

#include <random>

#include "nhodge/cayley.hpp"
#include "nhodge/consistency.hpp"
#include "nhodge/kspoly.hpp"
#include "nhodge/monodromy.hpp"
#include "nhodge/random_instances.hpp"

using namespace nhodge;

namespace {

std::vector<TPolynomial> sample(int n, int count) {
  std::mt19937_64 rng(99);
  std::vector<TPolynomial> out;
  for (int i = 0; i < count; ++i) {
    InstanceShape shape;
    shape.n = n;
    shape.points = 12;
    out.push_back(random_hypersurface(rng, shape));
  }
  return out;
}

void BM_NewtonData(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_newton_data(polys[i++ % polys.size()]));
}
BENCHMARK(BM_NewtonData)->DenseRange(1, 3);

// Local h of every cell against the top face.
void BM_LocalH(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    NewtonData nd = build_newton_data(polys[i++ % polys.size()]);
    KSEngine ks(nd);
    for (int c = 0; c < nd.subdivision().cell_count(); ++c) benchmark::DoNotOptimize(ks.local_h(ks.top_face(), c));
  }
}
BENCHMARK(BM_LocalH)->DenseRange(1, 3);

void BM_JordanAllRoutes(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    NewtonData nd = build_newton_data(polys[i++ % polys.size()]);
    KSEngine ks(nd);
    for (const auto& lam : nd.spectrum())
      if (!nd.is_bad(lam)) benchmark::DoNotOptimize(jordan_both(ks, lam));
  }
}
BENCHMARK(BM_JordanAllRoutes)->DenseRange(1, 3);

void BM_CayleyData(benchmark::State& state) {
  std::mt19937_64 rng(7);
  InstanceShape shape;
  shape.n = 3;
  shape.points = 5;
  shape.max_coord = 2;
  const CISystem sys = random_complete_intersection(rng, shape, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_cayley_data(sys));
}
BENCHMARK(BM_CayleyData);

void BM_ConsistencySuite(benchmark::State& state) {
  const auto polys = sample(2, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(consistency_suite(polys[i++ % polys.size()]));
}
BENCHMARK(BM_ConsistencySuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
