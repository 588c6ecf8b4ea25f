#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "degset/closedform.hpp"
#include "degset/graphicality.hpp"
#include "degset/padding.hpp"
#include "degset/realization.hpp"
#include "degset/solver.hpp"

using namespace degset;

namespace {

DegreeSequence random_sequence(std::mt19937& rng, int len, int max_v) {
  std::vector<int> values;
  for (int i = 0; i < len; ++i)
    values.push_back(1 + static_cast<int>(rng() % max_v));
  return DegreeSequence::from_values(std::move(values));
}

void BM_full_decider(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<DegreeSequence> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_sequence(rng, static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)) / 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_graphic_full(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_full_decider)->Arg(16)->Arg(256)->Arg(4096);

void BM_refined_decider(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<DegreeSequence> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_sequence(rng, static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)) / 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_graphic_refined(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_refined_decider)->Arg(16)->Arg(256)->Arg(4096);

void BM_lq_exact(benchmark::State& state) {
  const int top = static_cast<int>(state.range(0));
  std::vector<int> degrees;
  for (int v = top; v >= top - 2; --v) degrees.push_back(v);
  DegreeSet d(degrees);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lq_exact(d).lq);
  }
}
BENCHMARK(BM_lq_exact)->Arg(5)->Arg(20)->Arg(60);

void BM_min_padding(benchmark::State& state) {
  std::vector<int> degrees;
  for (int v = static_cast<int>(state.range(0)); v >= 2; v -= 2)
    degrees.push_back(v);
  DegreeSet d(degrees);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_padding(d).C_star);
  }
}
BENCHMARK(BM_min_padding)->Arg(10)->Arg(40)->Arg(100);

void BM_realize(benchmark::State& state) {
  auto padded = approx_sequence(
      DegreeSet({static_cast<int>(state.range(0)),
                 static_cast<int>(state.range(0)) / 2, 3}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize(padded).edges().size());
  }
}
BENCHMARK(BM_realize)->Arg(10)->Arg(40)->Arg(100);

void BM_interval_table_row(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (int m = 1; m <= n; ++m) total += lq_interval(m, n).lq;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_interval_table_row)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
