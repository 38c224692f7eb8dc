#include <benchmark/benchmark.h>

#include "conetutte/cone.hpp"
#include "conetutte/poset.hpp"
#include "conetutte/tutte.hpp"
#include "conetutte/verify.hpp"

using namespace conetutte;

namespace {

void BM_ConeF_Path(benchmark::State& state) {
  auto g = path_graph(static_cast<std::size_t>(state.range(0)));
  const TutteOptions opt{state.range(1) != 0};
  for (auto _ : state) {
    clear_tutte_cache();
    benchmark::DoNotOptimize(cone_f(g, opt));
  }
}
BENCHMARK(BM_ConeF_Path)->ArgsProduct({{6, 9, 12}, {0, 1}})->ArgNames({"n", "memo"});

void BM_ConeF_Star(benchmark::State& state) {
  auto g = star_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    clear_tutte_cache();
    benchmark::DoNotOptimize(cone_f(g));
  }
}
BENCHMARK(BM_ConeF_Star)->Arg(6)->Arg(9)->Arg(12);

void BM_TutteWheel(benchmark::State& state) {
  auto g = cone(cycle_graph(static_cast<std::size_t>(state.range(0)))).graph;
  for (auto _ : state) {
    clear_tutte_cache();
    benchmark::DoNotOptimize(tutte_at_x1(g));
  }
}
BENCHMARK(BM_TutteWheel)->Arg(6)->Arg(9)->Arg(12);

void BM_SubsetOracle(benchmark::State& state) {
  auto g = cone(path_graph(static_cast<std::size_t>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(tutte_subset_oracle(g));
}
BENCHMARK(BM_SubsetOracle)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateTrees)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BuildPoset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildPoset)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_FactorizationSuite(benchmark::State& state) {
  verify::SuiteOptions opt;
  opt.max_n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_suite("factorization", opt));
}
BENCHMARK(BM_FactorizationSuite)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
