#include <benchmark/benchmark.h>

#include "hllab/exponents.hpp"
#include "hllab/ksz.hpp"
#include "hllab/norm_estimation.hpp"
#include "hllab/tensor.hpp"

namespace {

const hllab::ExtScalar kInf = hllab::ExtScalar::infinity();

void BM_MixedNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto T = hllab::ksz_sample(3, n, 1);
  const std::vector<double> t{4.0 / 3, 2.5, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(hllab::mixed_norm(T, t));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * T.size()));
}
BENCHMARK(BM_MixedNorm)->RangeMultiplier(2)->Range(8, 64);

void BM_EstimateNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto T = hllab::ksz_sample(2, n, 2);
  const hllab::BallSpec ball{{kInf, kInf}};
  hllab::MultistartOptions opts;
  opts.restarts = 50;
  for (auto _ : state) benchmark::DoNotOptimize(hllab::estimate_norm(T, ball, opts).value);
}
BENCHMARK(BM_EstimateNorm)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_ExactNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto T = hllab::ksz_sample(2, n, 3);
  const hllab::BallSpec ball{{kInf, kInf}};
  for (auto _ : state) benchmark::DoNotOptimize(hllab::exact_norm(T, ball).value);
}
BENCHMARK(BM_ExactNorm)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ExponentsMain(benchmark::State& state) {
  const auto inst = hllab::HLInstance::isotropic(static_cast<int>(state.range(0)), hllab::ExtScalar{state.range(0) + 1});
  for (auto _ : state) benchmark::DoNotOptimize(hllab::exponents_main(inst));
}
BENCHMARK(BM_ExponentsMain)->Arg(9)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
