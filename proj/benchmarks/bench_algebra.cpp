#include <benchmark/benchmark.h>

#include "jetlie/catalog.hpp"
#include "jetlie/suite.hpp"

using namespace jetlie;

namespace {

void BM_Prolong(benchmark::State& state) {
  auto alg = catalog::algebra("ecga");
  const auto& f = alg.field("X1");
  for (auto _ : state) benchmark::DoNotOptimize(prolong(f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Prolong)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyTable(benchmark::State& state) {
  auto alg = catalog::algebra("ecga");
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(alg.fields, alg.table));
}
BENCHMARK(BM_VerifyTable)->Unit(benchmark::kMillisecond);

void BM_OrbitRank(benchmark::State& state) {
  auto alg = catalog::algebra("ecga");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_rank(alg.fields, alg.space, 1));
}
BENCHMARK(BM_OrbitRank)->Unit(benchmark::kMillisecond);

void BM_SuiteGroup(benchmark::State& state, const char* group) {
  suite::Options opt;
  opt.only = {group};
  for (auto _ : state) benchmark::DoNotOptimize(suite::run(opt));
}
BENCHMARK_CAPTURE(BM_SuiteGroup, theorem7, "theorem7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteGroup, mutation, "mutation")->Unit(benchmark::kMillisecond);

}  // namespace
