#include <benchmark/benchmark.h>

#include "pretzel/fox.hpp"
#include "pretzel/lspace.hpp"

namespace {

using namespace pretzel;

void BM_StateSum(benchmark::State& state, PretzelCode code) {
  OrientedDiagram diagram = orient(code);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(diagram));
}
BENCHMARK_CAPTURE(BM_StateSum, trefoil, PretzelCode{1, 1, 1});
BENCHMARK_CAPTURE(BM_StateSum, type2a, PretzelCode{3, -3, 1, 3, 2});
BENCHMARK_CAPTURE(BM_StateSum, big, PretzelCode{9, -9, 9, -9, 8});

void BM_FoxOracle(benchmark::State& state, PretzelCode code) {
  for (auto _ : state) benchmark::DoNotOptimize(alexander_oracle(code));
}
BENCHMARK_CAPTURE(BM_FoxOracle, trefoil, PretzelCode{1, 1, 1});
BENCHMARK_CAPTURE(BM_FoxOracle, type2a, PretzelCode{3, -3, 1, 3, 2});

void BM_Classify(benchmark::State& state, PretzelCode code) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_lspace(code));
}
BENCHMARK_CAPTURE(BM_Classify, hfk_exception, PretzelCode{3, -5, 3, -2});

}  // namespace

BENCHMARK_MAIN();
