#include <benchmark/benchmark.h>

#include <random>

#include "zss/encode.hpp"
#include "zss/grid.hpp"
#include "zss/satgen.hpp"
#include "zss/search.hpp"
#include "zss/solver.hpp"
#include "zss/structure.hpp"

using namespace zss;

namespace {

Grid random_grid(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Grid g(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rng() & 1u) g.set(i, j, 1);
  return g;
}

// Worst case for the scan: a free grid has no early exit.
void BM_ScanFreeGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g = checkerboard(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_square(g));
  state.SetItemsProcessed(state.iterations() * count_squares(n, n));
}
BENCHMARK(BM_ScanFreeGrid)->Arg(8)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_ScanRandomGrid(benchmark::State& state) {
  const Grid g = random_grid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_zero_sum_square(g));
}
BENCHMARK(BM_ScanRandomGrid)->Arg(64)->Arg(256);

void BM_Discrepancy(benchmark::State& state) {
  const Grid g = random_grid(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancy(g));
}
BENCHMARK(BM_Discrepancy)->Arg(64)->Arg(512);

void BM_DiagonalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g = make_t_diagonal(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_form(g));
}
BENCHMARK(BM_DiagonalForm)->Arg(16)->Arg(128);

void BM_BalancedWindow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Grid g(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if ((j <= n / 2) == (i <= n / 2)) g.set(i, j, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_balanced_submatrix(g));
}
BENCHMARK(BM_BalancedWindow)->Arg(16)->Arg(128);

void BM_BaseCaseUnsat(benchmark::State& state) {
  const InternalBackend backend;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_base_case(n, backend));
}
BENCHMARK(BM_BaseCaseUnsat)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_BruteForceMinDisc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_discrepancy(n, n));
}
BENCHMARK(BM_BruteForceMinDisc)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BruteForceEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_zssf({n, n, std::nullopt, false, SymmetryGroup::full()}));
  }
}
BENCHMARK(BM_BruteForceEnumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SplitEnumerateDiagonalOnes(benchmark::State& state) {
  const InternalBackend backend;
  const int n = static_cast<int>(state.range(0));
  std::vector<FixedCell> diag;
  for (int i = 1; i <= n; ++i) diag.push_back({i, i, 1});
  const ZssEncoding enc = fix_cells(encode_zssf(n, n), diag);
  EnumerateOptions opt;
  opt.strategy = EnumerationStrategy::Split;
  std::size_t models = 0;
  for (auto _ : state) models = enumerate_models(enc, backend, opt).size();
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_SplitEnumerateDiagonalOnes)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Descent(benchmark::State& state) {
  const InternalBackend backend;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_disc_descent(n, n, backend));
}
BENCHMARK(BM_Descent)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
