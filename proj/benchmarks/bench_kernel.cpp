#include <benchmark/benchmark.h>

#include "jetlie/polynomial_gcd.hpp"

using namespace jetlie;

namespace {

Polynomial var(const char* n) { return Polynomial::variable(Symbol::intern(n)); }

void BM_GcdTrivariate(benchmark::State& state) {
  auto x = var("x"), y = var("y"), z = var("z");
  Polynomial common = (2 * x * y + z) * (y * z - x);
  Polynomial a = common * (x * x * z - y + 3);
  Polynomial b = common * (x + z * z);
  for (int i = 1; i < state.range(0); ++i) {
    a = a * (x + y + i);
    b = b * (y - z * i);
  }
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_GcdTrivariate)->DenseRange(1, 4);

void BM_SquareFree(benchmark::State& state) {
  auto p = var("p"), t = var("t"), x = var("x");
  Polynomial s = Polynomial(1) - p * t;
  Polynomial f = s.pow(static_cast<unsigned>(state.range(0))) * (x * x + t) * (x - p);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_decomposition(f));
}
BENCHMARK(BM_SquareFree)->DenseRange(2, 6, 2);

}  // namespace
