#include <benchmark/benchmark.h>

#include <vector>

#include "caforge/ca_geometry.hpp"
#include "caforge/discriminants.hpp"
#include "caforge/groebner.hpp"
#include "caforge/hasse_schmidt.hpp"
#include "caforge/mpoly.hpp"

using namespace caforge;

namespace {

void BM_HsMulti(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Field q = Field::rationals();
  MPoly prod = MPoly::constant(n, Coeff::one(q));
  for (int v = 0; v < n; ++v) prod = prod * MPoly::variable(n, q, v);
  MPoly p = prod * prod + prod;
  for (auto _ : state) {
    MPoly d = hs_multi(p, static_cast<unsigned>(n / 2 + 1));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_HsMulti)->Arg(4)->Arg(6)->Arg(8);

void BM_DiscTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DiscTable t = disc_table(n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_DiscTable)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TupleIdealGB(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Field q = Field::rationals();
  std::vector<int> tuple(static_cast<std::size_t>(n - 1), 1);
  for (std::size_t i = 0; i < tuple.size(); ++i)
    tuple[i] = static_cast<int>(i % static_cast<std::size_t>(n)) + 1;
  std::vector<MPoly> gens = tuple_ideal_generators(n, tuple, false, q);
  for (auto _ : state) {
    std::vector<MPoly> basis = buchberger(gens);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_TupleIdealGB)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
