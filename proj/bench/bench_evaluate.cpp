// Copyright 2026 The scenegen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP fitness evaluation of one generation's worth of scenes.
#include <benchmark/benchmark.h>

#include <vector>

#include "scenegen/evaluate.hpp"

namespace {

using namespace scenegen;

Slice column(int groundTop, int wallTop) {
  Slice s;
  s.cells.fill(Tile::Empty);
  for (int r = groundTop; r < kRows; ++r) s.cells[r] = Tile::Ground;
  for (int r = wallTop; r < groundTop; ++r) s.cells[r] = Tile::Brick;
  s.multiplicity = 1;
  return s;
}

SlicePool benchPool() {
  std::vector<Slice> slices = {column(12, 12), column(12, 12), column(12, 12),
                               column(12, 10), column(12, 9), column(12, 12)};
  slices[0].multiplicity = 6;
  slices[5].cells[11] = Tile::EnemyGoomba;
  return SlicePool::fromSlices(slices);
}

EvolutionConfig benchConfig() {
  EvolutionConfig cfg;
  cfg.search.nodeBudget = 3000;
  cfg.search.stallTicks = 60;
  return cfg;
}

std::vector<std::vector<int>> genotypes(const SlicePool& pool, int count) {
  Rng rng(7);
  std::vector<std::vector<int>> out(count, std::vector<int>(kSceneWidth));
  for (auto& g : out) {
    for (int& v : g) v = static_cast<int>(pool.sampleIndex(rng));
  }
  return out;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const SlicePool pool = benchPool();
  const EvolutionConfig cfg = benchConfig();
  const auto genes = genotypes(pool, static_cast<int>(state.range(0)));
  std::vector<FitnessPair> out(genes.size());
  for (auto _ : state) {
    evaluateSerial(pool, genes, cfg, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const SlicePool pool = benchPool();
  const EvolutionConfig cfg = benchConfig();
  const auto genes = genotypes(pool, static_cast<int>(state.range(0)));
  std::vector<FitnessPair> out(genes.size());
  for (auto _ : state) {
    evaluateParallel(pool, genes, cfg, out, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)
    ->Args({16, 2})
    ->Args({16, 4})
    ->Args({16, 0})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
