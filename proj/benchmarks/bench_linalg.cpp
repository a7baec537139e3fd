#include <benchmark/benchmark.h>

#include "lvnet/linalg.hpp"
#include "lvnet/ulvm.hpp"

namespace {

using namespace lvnet;

SymMatrix dense_pd(std::size_t p) {
  std::vector<double> l(p);
  for (std::size_t i = 0; i < p; ++i) l[i] = 0.3 + 0.7 * static_cast<double>(i % 5) / 4.0;
  return ulvm_covariance(UlvmModel(l));
}

void BM_InvertPd(benchmark::State& state) {
  const SymMatrix s = dense_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_pd(s));
}
BENCHMARK(BM_InvertPd)->RangeMultiplier(2)->Range(8, 128);

void BM_UlvmConcentration(benchmark::State& state) {
  const UlvmModel m(std::vector<double>(static_cast<std::size_t>(state.range(0)), 0.8));
  for (auto _ : state) benchmark::DoNotOptimize(ulvm_concentration(m));
}
BENCHMARK(BM_UlvmConcentration)->RangeMultiplier(2)->Range(8, 128);

void BM_SqrtSym(benchmark::State& state) {
  const SymMatrix s = dense_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_sym(s));
}
BENCHMARK(BM_SqrtSym)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
