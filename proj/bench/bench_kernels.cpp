// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "lilab/li.hpp"
#include "lilab/reduce.hpp"
#include "lilab/sieve.hpp"
#include "lilab/zero_finder.hpp"
#include "lilab/zeros.hpp"

using namespace lilab;

namespace {

Parallelism mode(const benchmark::State& s) { return s.range(0) ? Parallelism::openmp : Parallelism::serial; }

void BM_reduce_sum(benchmark::State& state) {
  const mpfr_prec_t prec = 256;
  for (auto _ : state) {
    BigFloat v = reduce_sum(200000, prec, ReductionOrder::fixed_tree, mode(state),
                            [&](std::size_t i) { return BigFloat(1, prec) / BigFloat(static_cast<long>(i + 1), prec); });
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_reduce_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mangoldt_sums(20'000'000, 3, mode(state)));
}
BENCHMARK(BM_sieve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_sieve_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mangoldt_sums_reference(20'000'000, 3));
}
BENCHMARK(BM_sieve_reference)->Unit(benchmark::kMillisecond);

void BM_rs_zeros(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rs_zeros(20000, mode(state)));
}
BENCHMARK(BM_rs_zeros)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_lambda_zero_sum(benchmark::State& state) {
  const ZeroTable t = load_zeros(LILAB_DATA_DIR "/zeros_100.txt");
  PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(lambda_zero_sum_range(1, 2000, t, TailModel{}, ctx, mode(state)));
}
BENCHMARK(BM_lambda_zero_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
