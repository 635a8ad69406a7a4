#include <benchmark/benchmark.h>

#include "vforge/chain_io.hpp"
#include "vforge/kernels.hpp"
#include "vforge/sampler.hpp"

using namespace vforge;

namespace {

const Chain& bench_chain() {
  static const Chain c = parse_chain("p = 2\nQ0: X @ 1/2\nQ1: X^2 - 2 @ 3/2\nQ2: X^4 + 2X^3 - 4X^2 - 4X + 12 @ 4\n");
  return c;
}

std::vector<Poly> bench_polys(int n) {
  PolySampler s(2, 1, "bench");
  std::vector<Poly> fs;
  for (int i = 0; i < n; ++i) fs.push_back(s.monic(1 + i % 8));
  return fs;
}

void BM_eval_serial(benchmark::State& st) {
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::eval_batch_serial(bench_chain(), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_eval_parallel(benchmark::State& st) {
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::eval_batch(bench_chain(), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_epsilon_serial(benchmark::State& st) {
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::epsilon_batch_serial(bench_chain(), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_epsilon_parallel(benchmark::State& st) {
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::epsilon_batch(bench_chain(), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_delta_serial(benchmark::State& st) {
  auto ext = extend_to_number_field(bench_chain().key(2), 2);
  AlgebraicNumber a(ext.front());
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::delta_batch_serial(a, bench_chain().epsilon_at(2), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_delta_parallel(benchmark::State& st) {
  auto ext = extend_to_number_field(bench_chain().key(2), 2);
  AlgebraicNumber a(ext.front());
  auto fs = bench_polys(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::delta_batch(a, bench_chain().epsilon_at(2), fs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_eval_serial)->Arg(256);
BENCHMARK(BM_eval_parallel)->Arg(256);
BENCHMARK(BM_epsilon_serial)->Arg(256);
BENCHMARK(BM_epsilon_parallel)->Arg(256);
BENCHMARK(BM_delta_serial)->Arg(64);
BENCHMARK(BM_delta_parallel)->Arg(64);

BENCHMARK_MAIN();
