#include <benchmark/benchmark.h>

#include "sigmaconic/census.hpp"
#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/gf.hpp"
#include "sigmaconic/mrdcodes.hpp"
#include "sigmaconic/rng.hpp"
#include "sigmaconic/sesqui.hpp"

using namespace sigmaconic;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto F = build_field(static_cast<unsigned>(state.range(0)), 1, static_cast<unsigned>(state.range(1)), 1);
  std::uint32_t acc = 1;
  std::uint64_t c = 0;
  for (auto _ : state) {
    const FieldElem x{draw_element(7, c++, F->size())};
    acc = F->mul(FieldElem{acc}, x).code | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Args({2, 3})->Args({3, 3})->Args({2, 10})->Args({3, 9});

void BM_AbsolutePoints(benchmark::State& state) {
  const auto F = build_field(static_cast<unsigned>(state.range(0)), 1, static_cast<unsigned>(state.range(1)), 1);
  const SesquiForm form(F, Matrix::identity(3));
  for (auto _ : state) benchmark::DoNotOptimize(absolute_points(form).size());
}
BENCHMARK(BM_AbsolutePoints)->Args({2, 3})->Args({3, 3});

// One matrix through the census kernel: Gamma, line spectrum, fixed points.
void BM_CensusKernel(benchmark::State& state) {
  const auto F = build_field(static_cast<unsigned>(state.range(0)), 1, static_cast<unsigned>(state.range(1)), 1);
  CensusConfig cfg;
  cfg.matrix_class = MatrixClass::All;
  const CensusEngine engine(F, cfg);
  std::uint64_t c = 0;
  for (auto _ : state) {
    MatrixCodes a{};
    for (auto& x : a) x = draw_element(11, c++, F->size());
    benchmark::DoNotOptimize(engine.process(0, a));
  }
}
BENCHMARK(BM_CensusKernel)->Args({2, 3})->Args({3, 3})->Args({2, 2})->Args({3, 2});

void BM_CensusRun(benchmark::State& state) {
  const auto F = build_field(2, 1, 3, 1);
  CensusConfig cfg;
  cfg.mode = SourceMode::Random;
  cfg.count = 10000;
  cfg.seed = 1;
  const CensusEngine engine(F, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(engine.run(nullptr).matched);
  state.SetItemsProcessed(state.iterations() * cfg.count);
}
BENCHMARK(BM_CensusRun)->Unit(benchmark::kMillisecond);

void BM_RankDistanceScan(benchmark::State& state) {
  const auto F = build_field(3, 1, 3, 1);
  const CfSet cf = cf_canonical(*F, 1);
  const std::vector<FieldElem> T{F->one()};
  const auto X = exterior_set(*F, cf, T);
  const auto code = build_code(*F, X, ScalarSet::AllUnits);
  for (auto _ : state) benchmark::DoNotOptimize(min_rank_distance(*F, code));
}
BENCHMARK(BM_RankDistanceScan)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
