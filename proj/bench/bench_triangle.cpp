// Serial reference vs OpenMP row kernel for compute_table.

#include <benchmark/benchmark.h>

#include "gbc/triangle.hpp"

namespace {

const gbc::Params kParams{gbc::Rational::parse("1/2"), 3, gbc::Rational::parse("-2/3"),
                          gbc::Rational::parse("3/4"), -1, 5};

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gbc::compute_table_serial(kParams, state.range(0)));
}

void BM_TableOpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gbc::compute_table(kParams, state.range(0)));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableOpenMP)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
