#include <benchmark/benchmark.h>

#include "lvnet/lasso.hpp"
#include "lvnet/nodewise.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"

namespace {

using namespace lvnet;

DataMatrix ulvm_data(std::size_t p, std::size_t n) {
  return sample_ulvm(UlvmModel(std::vector<double>(p, 1.0)), n, 1).data;
}

void BM_NodewiseOls(benchmark::State& state) {
  const DataMatrix d = ulvm_data(static_cast<std::size_t>(state.range(0)), 1000);
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(nodewise_network(d, Selector::significance(0.01), EdgeRule::and_rule,
                                              NodewiseOptions{FitMode::centered, threads}));
}
BENCHMARK(BM_NodewiseOls)->Args({10, 1})->Args({30, 1})->Args({30, 4});

void BM_LassoNetwork(benchmark::State& state) {
  const DataMatrix d = ulvm_data(static_cast<std::size_t>(state.range(0)), 500);
  for (auto _ : state) benchmark::DoNotOptimize(lasso_network(d, 0.2, EdgeRule::and_rule));
}
BENCHMARK(BM_LassoNetwork)->Arg(10)->Arg(30);

void BM_SampleUlvm(benchmark::State& state) {
  const UlvmModel m(std::vector<double>(10, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_ulvm(m, static_cast<std::size_t>(state.range(0)), 3));
}
BENCHMARK(BM_SampleUlvm)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
