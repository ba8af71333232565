#include <benchmark/benchmark.h>

#include <vector>

#include "akzeta/combinatorics.hpp"
#include "akzeta/evaluator.hpp"
#include "akzeta/nested_sum.hpp"
#include "akzeta/powerseries.hpp"

using namespace akzeta;

namespace {

PrecisionContext context(bool parallel = false) {
  PrecisionContext ctx;
  ctx.digits = 50;
  ctx.parallel = parallel;
  return ctx;
}

void BM_NestedSum(benchmark::State& state) {
  const auto ctx = context();
  const std::size_t depth = state.range(0);
  const long cutoff = state.range(1);
  const WeightFn weights = [depth](long n, std::span<Real> w) {
    for (std::size_t i = 0; i < depth; ++i) w[i] = Real(1) / (n * n);
  };
  for (auto _ : state) benchmark::DoNotOptimize(nested_sum(depth, cutoff, weights));
  state.SetItemsProcessed(state.iterations() * cutoff);
}
BENCHMARK(BM_NestedSum)->Args({1, 1 << 14})->Args({3, 1 << 14})->Args({5, 1 << 14})->Unit(benchmark::kMillisecond);

void BM_HurwitzMzv(benchmark::State& state) {
  const auto ctx = context();
  const Composition e = Composition::parse("1,2,3");
  for (auto _ : state) benchmark::DoNotOptimize(eval_hurwitz_mzv(e, Real("0.5"), ctx));
}
BENCHMARK(BM_HurwitzMzv)->Unit(benchmark::kMillisecond);

void BM_AkBernoulliPolys(benchmark::State& state) {
  const Composition v = Composition::parse("1,2");
  const unsigned m_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ak_bernoulli_polys(v, Rational(2), m_max));
}
BENCHMARK(BM_AkBernoulliPolys)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_InverseBinomial(benchmark::State& state) {
  const auto ctx = context();
  const Composition b = Composition::parse("3");
  const Real p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_inverse_binomial(b, 1, p, ctx));
}
BENCHMARK(BM_InverseBinomial)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  ScopedPrecision precision(50);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
