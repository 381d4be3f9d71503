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

#ifndef SCENEGEN_EVALUATE_HPP_
#define SCENEGEN_EVALUATE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "scenegen/corpus.hpp"
#include "scenegen/evolution.hpp"

namespace scenegen {

struct FitnessPair {
  double infeasible = 0.0;
  std::optional<double> feasible;  // set only for feasible genotypes

  friend bool operator==(const FitnessPair&, const FitnessPair&) = default;
};

// Pipe check always; agent playthroughs only when the pipe check passes.
FitnessPair evaluateGenotype(const SlicePool& pool, std::span<const int> genes,
                             const EvolutionConfig& cfg);

// Reference loop, one genotype after another.
void evaluateSerial(const SlicePool& pool,
                    std::span<const std::vector<int>> genotypes,
                    const EvolutionConfig& cfg, std::span<FitnessPair> out);

// Same results as evaluateSerial, with genotypes spread over OpenMP threads.
// workers <= 0 uses the OpenMP default.
void evaluateParallel(const SlicePool& pool,
                      std::span<const std::vector<int>> genotypes,
                      const EvolutionConfig& cfg, std::span<FitnessPair> out,
                      int workers = 0);

}  // namespace scenegen

#endif  // SCENEGEN_EVALUATE_HPP_
