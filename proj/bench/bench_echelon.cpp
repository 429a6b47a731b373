#include <benchmark/benchmark.h>

#include <random>

#include "bcsurf/modp.hpp"

using namespace bcs;

namespace {

// rank-deficient: the last quarter of rows are combinations of earlier ones
std::vector<std::vector<std::uint64_t>> rows(std::size_t n, std::size_t cols) {
  std::mt19937_64 rng(7);
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(cols));
  const std::size_t free = n - n / 4;
  for (std::size_t i = 0; i < free; ++i)
    for (auto& x : m[i]) x = rng() % fp::P;
  for (std::size_t i = free; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = fp::add(m[i - free][j], fp::mul(3, m[i - free + 1][j]));
  return m;
}

void BM_serial(benchmark::State& st) {
  auto m = rows(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    IncrementalEchelon e(m[0].size());
    benchmark::DoNotOptimize(e.add_rows_serial(m));
  }
}

void BM_parallel(benchmark::State& st) {
  auto m = rows(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    IncrementalEchelon e(m[0].size());
    benchmark::DoNotOptimize(e.add_rows_parallel(m));
  }
}

}  // namespace

BENCHMARK(BM_serial)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
