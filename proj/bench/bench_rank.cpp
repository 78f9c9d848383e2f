// Serial against OpenMP rank kernels on fat-point conditions matrices, plus
// the grid sweep at one and at all available threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <string>

#include "fatpoint3/literal.hpp"
#include "fatpoint3/oracle.hpp"

using namespace fatpoint3;

namespace {

const char* const kSystems[] = {"7 4^6", "16 11 7^8", "22 10^9"};

ModMatrix matrix_for(const char* literal) {
  const PrimeField field(kDefaultPrime);
  const auto system = parse_system(literal);
  const auto points = sample_points(system.points(), 1, PointMode::all_random, field);
  return conditions_matrix(system, points, field).entries;
}

void BM_RankSerial(benchmark::State& state) {
  const PrimeField field(kDefaultPrime);
  const auto matrix = matrix_for(kSystems[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_serial(matrix, field));
  }
  state.SetLabel(kSystems[state.range(0)]);
}

void BM_RankParallel(benchmark::State& state) {
  const PrimeField field(kDefaultPrime);
  const auto matrix = matrix_for(kSystems[state.range(0)]);
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_parallel(matrix, field));
  }
  state.SetLabel(std::string(kSystems[state.range(0)]) + " threads=" +
                 std::to_string(state.range(1)));
}

void BM_ConditionsMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_for(kSystems[state.range(0)]));
  }
  state.SetLabel(kSystems[state.range(0)]);
}

void BM_Grid(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_grid(GridBounds{10, 4, 10}, OracleConfig{}));
  }
}

void thread_counts(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int s = 0; s < 3; ++s) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({s, t});
    if ((max_threads & (max_threads - 1)) != 0) b->Args({s, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_RankSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConditionsMatrix)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Grid)->Arg(1)->Arg(omp_get_max_threads())->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
