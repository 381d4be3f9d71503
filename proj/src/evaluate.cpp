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

#include "scenegen/evaluate.hpp"

#include <omp.h>

#include <exception>

namespace scenegen {

FitnessPair evaluateGenotype(const SlicePool& pool, std::span<const int> genes,
                             const EvolutionConfig& cfg) {
  const Scene scene = assembleScene(pool, genes);
  FitnessPair f;
  f.infeasible = infeasibleFitness(scene);
  if (f.infeasible == 1.0) f.feasible = feasibleFitness(scene, cfg);
  return f;
}

void evaluateSerial(const SlicePool& pool,
                    std::span<const std::vector<int>> genotypes,
                    const EvolutionConfig& cfg, std::span<FitnessPair> out) {
  for (std::size_t i = 0; i < genotypes.size(); ++i) {
    out[i] = evaluateGenotype(pool, genotypes[i], cfg);
  }
}

void evaluateParallel(const SlicePool& pool,
                      std::span<const std::vector<int>> genotypes,
                      const EvolutionConfig& cfg, std::span<FitnessPair> out,
                      int workers) {
  const auto count = static_cast<std::ptrdiff_t>(genotypes.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::exception_ptr failure;

  // Each index writes only its own slot, so results do not depend on
  // scheduling order.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = evaluateGenotype(pool, genotypes[i], cfg);
    } catch (...) {
#pragma omp critical(scenegen_evaluate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace scenegen
