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

#ifndef SCENEGEN_EVOLUTION_HPP_
#define SCENEGEN_EVOLUTION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scenegen/agents.hpp"
#include "scenegen/corpus.hpp"
#include "scenegen/rng.hpp"
#include "scenegen/simulator.hpp"

namespace scenegen {

// One scene as a row of slice indices into a SlicePool.
struct Chromosome {
  std::vector<int> genes;
  std::optional<double> infeasibleFitness;
  std::optional<double> feasibleFitness;

  // Only meaningful once infeasibleFitness has been computed.
  bool feasible() const { return infeasibleFitness && *infeasibleFitness == 1.0; }
};

struct EvolutionConfig {
  int populationSize = 100;
  int generations = 120;
  double crossoverRate = 0.70;
  double mutationRate = 0.30;
  int elitism = 1;
  AgentCapabilities limitedAgent = AgentCapabilities::limitedJump();
  std::uint64_t seed = 0;
  PhysicsConfig physics;
  SearchConfig search;
  // Genes per chromosome. Anything other than 18 is a test-only mini-scene.
  int sceneWidth = kSceneWidth;

  // Throws InvalidConfigError.
  void validate() const;
};

struct GenerationRecord {
  int generation = 0;
  double maxFeasibleFitness = 0.0;   // 0 when no feasible chromosome exists
  double meanFeasibleFitness = 0.0;  // 0 when no feasible chromosome exists
  int feasibleCount = 0;
  int infeasibleCount = 0;
  Chromosome best;  // best of this generation (feasible first)
};

struct RunStats {
  std::vector<GenerationRecord> perGeneration;

  static constexpr const char* kCsvHeader =
      "generation,maxFeasibleFitness,meanFeasibleFitness,feasibleCount,infeasibleCount";
  std::string toCsv() const;
};

struct EvolutionResult {
  Chromosome best;
  RunStats stats;
};

using ProgressSink = std::function<void(const GenerationRecord&)>;

Scene assembleScene(const SlicePool& pool, std::span<const int> genes);

// Fraction of pipe tiles whose same-rank partner sits on the correct side
// (left parts need the right part at c+1, right parts the left part at c-1).
// 1.0 when there are no pipe tiles.
double infeasibleFitness(const Scene& scene);

// 1 - progress(limited) when the perfect agent wins, else 0. Scenes the
// simulator cannot start score 0.
double feasibleFitness(const Scene& scene, const EvolutionConfig& cfg);

// Swaps genes[first..last] (inclusive) between copies of a and b.
std::pair<Chromosome, Chromosome> twoPointCrossover(const Chromosome& a,
                                                    const Chromosome& b,
                                                    std::size_t first,
                                                    std::size_t last);
// Cut points drawn uniformly from all pairs first <= last.
std::pair<Chromosome, Chromosome> twoPointCrossover(const Chromosome& a,
                                                    const Chromosome& b, Rng& rng);

// Replaces one uniformly chosen gene with a weighted draw from the pool.
Chromosome mutate(const Chromosome& c, const SlicePool& pool, Rng& rng);

// Linear rank selection: ranks 1..N by ascending fitness (stable), rank r
// drawn with probability r / (N(N+1)/2). Returns an index into fitness.
std::size_t rankSelectIndex(std::span<const double> fitness, Rng& rng);

EvolutionResult evolve(const SlicePool& pool, const EvolutionConfig& cfg,
                       const ProgressSink& sink = {}, int workers = 0);

}  // namespace scenegen

#endif  // SCENEGEN_EVOLUTION_HPP_
