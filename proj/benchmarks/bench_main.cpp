#include <benchmark/benchmark.h>

#include "qcw/cwtree.hpp"
#include "qcw/density.hpp"
#include "qcw/expansions.hpp"

namespace {

void BM_FPolyWarm(benchmark::State& state) {
  const qcw::HyperParams p(3, 2);
  const auto n = state.range(0);
  qcw::f_poly(n, p);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::f_poly(n, p));
}
BENCHMARK(BM_FPolyWarm)->Arg(1000)->Arg(1000000);

void BM_EnumerateExpansions(benchmark::State& state) {
  const qcw::HyperParams p(2, 0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::enumerate_expansions(n, p));
}
BENCHMARK(BM_EnumerateExpansions)->Arg(683)->Arg(43690);

void BM_BuildTree(benchmark::State& state) {
  const qcw::TreeParams p(3, 2);
  const auto depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::build_tree(p, depth));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * qcw::tree_size(3, depth)));
}
BENCHMARK(BM_BuildTree)->DenseRange(4, 7);

void BM_FindAndReplay(benchmark::State& state) {
  const qcw::TreeParams p(3, 2);
  const qcw::Fraction target(3, 23);
  for (auto _ : state) {
    const auto path = qcw::find_path(target, p);
    benchmark::DoNotOptimize(qcw::replay_path(path, p));
  }
}
BENCHMARK(BM_FindAndReplay);

void BM_VerifyDensity(benchmark::State& state) {
  const qcw::TreeParams p(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::verify_density(p, state.range(0)));
}
BENCHMARK(BM_VerifyDensity)->Arg(25)->Arg(60);

}  // namespace
BENCHMARK_MAIN();
