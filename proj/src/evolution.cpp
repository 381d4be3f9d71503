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

#include "scenegen/evolution.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "scenegen/evaluate.hpp"

namespace scenegen {

void EvolutionConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidConfigError(what);
  };
  require(populationSize >= 2, "populationSize must be at least 2");
  require(generations >= 0, "generations must be non-negative");
  require(crossoverRate >= 0 && crossoverRate <= 1, "crossoverRate must be in [0,1]");
  require(mutationRate >= 0 && mutationRate <= 1, "mutationRate must be in [0,1]");
  require(elitism >= 0 && elitism < populationSize,
          "elitism must be in [0, populationSize)");
  require(sceneWidth >= 1 && sceneWidth <= kSceneWidth, "sceneWidth must be in [1,18]");
  physics.validate();
  search.validate();
}

std::string RunStats::toCsv() const {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[160];
  for (const GenerationRecord& g : perGeneration) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%d,%d\n", g.generation,
                  g.maxFeasibleFitness, g.meanFeasibleFitness, g.feasibleCount,
                  g.infeasibleCount);
    out += buf;
  }
  return out;
}

Scene assembleScene(const SlicePool& pool, std::span<const int> genes) {
  TileGrid grid(static_cast<int>(genes.size()));
  for (std::size_t c = 0; c < genes.size(); ++c) {
    const Slice& s = pool[static_cast<std::size_t>(genes[c])];
    for (int r = 0; r < kRows; ++r) grid.set(r, static_cast<int>(c), s.cells[r]);
  }
  return Scene(grid);
}

double infeasibleFitness(const Scene& scene) {
  int total = 0;
  int matched = 0;
  auto tileAt = [&](int r, int c) {
    return c >= 0 && c < scene.width() ? scene.at(r, c) : Tile::Empty;
  };
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < scene.width(); ++c) {
      const Tile t = scene.at(r, c);
      if (!isPipe(t)) continue;
      ++total;
      bool ok = false;
      switch (t) {
        case Tile::PipeTopLeft: ok = tileAt(r, c + 1) == Tile::PipeTopRight; break;
        case Tile::PipeBodyLeft: ok = tileAt(r, c + 1) == Tile::PipeBodyRight; break;
        case Tile::PipeTopRight: ok = tileAt(r, c - 1) == Tile::PipeTopLeft; break;
        case Tile::PipeBodyRight: ok = tileAt(r, c - 1) == Tile::PipeBodyLeft; break;
        default: break;
      }
      if (ok) ++matched;
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(matched) / total;
}

double feasibleFitness(const Scene& scene, const EvolutionConfig& cfg) {
  PlayResult perfect;
  try {
    perfect = playScene(scene, AgentCapabilities::perfect(), cfg.physics, cfg.search);
  } catch (const NoSpawnSurfaceError&) {
    return 0.0;
  }
  if (perfect.status != Status::Win) return 0.0;
  const PlayResult limited =
      playScene(scene, cfg.limitedAgent, cfg.physics, cfg.search);
  return std::clamp(1.0 - limited.progress, 0.0, 1.0);
}

std::pair<Chromosome, Chromosome> twoPointCrossover(const Chromosome& a,
                                                    const Chromosome& b,
                                                    std::size_t first,
                                                    std::size_t last) {
  Chromosome ca{a.genes, std::nullopt, std::nullopt};
  Chromosome cb{b.genes, std::nullopt, std::nullopt};
  for (std::size_t i = first; i <= last; ++i) std::swap(ca.genes[i], cb.genes[i]);
  return {std::move(ca), std::move(cb)};
}

std::pair<Chromosome, Chromosome> twoPointCrossover(const Chromosome& a,
                                                    const Chromosome& b, Rng& rng) {
  const std::size_t n = a.genes.size();
  std::uint64_t k = rng.below(n * (n + 1) / 2);
  std::size_t first = 0;
  while (k >= n - first) {
    k -= n - first;
    ++first;
  }
  return twoPointCrossover(a, b, first, first + static_cast<std::size_t>(k));
}

Chromosome mutate(const Chromosome& c, const SlicePool& pool, Rng& rng) {
  if (pool.empty()) throw EmptyPoolError();
  Chromosome out{c.genes, std::nullopt, std::nullopt};
  const std::size_t pos = rng.below(out.genes.size());
  out.genes[pos] = static_cast<int>(pool.sampleIndex(rng));
  return out;
}

std::size_t rankSelectIndex(std::span<const double> fitness, Rng& rng) {
  const std::size_t n = fitness.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
  std::uint64_t ticket = rng.below(n * (n + 1) / 2);
  // Rank r (1-based) owns r consecutive tickets.
  for (std::size_t r = 1; r <= n; ++r) {
    if (ticket < r) return order[r - 1];
    ticket -= r;
  }
  return order.back();
}

namespace {

// Indices of pop ordered best-first by the given fitness, ties by position.
std::vector<std::size_t> bestFirst(const std::vector<Chromosome>& pop,
                                   const std::vector<std::size_t>& members,
                                   bool byFeasible) {
  std::vector<std::size_t> out = members;
  auto fit = [&](std::size_t i) {
    return byFeasible ? *pop[i].feasibleFitness : *pop[i].infeasibleFitness;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](std::size_t a, std::size_t b) { return fit(a) > fit(b); });
  return out;
}

}  // namespace

EvolutionResult evolve(const SlicePool& pool, const EvolutionConfig& cfg,
                       const ProgressSink& sink, int workers) {
  if (pool.empty()) throw EmptyPoolError();
  cfg.validate();

  Rng rng(cfg.seed);
  const auto n = static_cast<std::size_t>(cfg.populationSize);
  std::map<std::vector<int>, FitnessPair> cache;

  std::vector<Chromosome> population(n);
  for (Chromosome& c : population) {
    c.genes.resize(static_cast<std::size_t>(cfg.sceneWidth));
    for (int& g : c.genes) g = static_cast<int>(pool.sampleIndex(rng));
  }

  EvolutionResult result;
  std::optional<Chromosome> bestFeasible;
  std::optional<Chromosome> bestInfeasible;

  for (int gen = 0;; ++gen) {
    // Evaluate genotypes not seen before, in population order.
    std::vector<std::vector<int>> todo;
    for (const Chromosome& c : population) {
      if (!cache.contains(c.genes) &&
          std::find(todo.begin(), todo.end(), c.genes) == todo.end()) {
        todo.push_back(c.genes);
      }
    }
    std::vector<FitnessPair> scores(todo.size());
    evaluateParallel(pool, todo, cfg, scores, workers);
    for (std::size_t i = 0; i < todo.size(); ++i) cache.emplace(todo[i], scores[i]);

    std::vector<std::size_t> feasibleIdx, infeasibleIdx;
    for (std::size_t i = 0; i < n; ++i) {
      const FitnessPair& f = cache.at(population[i].genes);
      population[i].infeasibleFitness = f.infeasible;
      population[i].feasibleFitness = f.feasible;
      (population[i].feasible() ? feasibleIdx : infeasibleIdx).push_back(i);
    }

    GenerationRecord rec;
    rec.generation = gen;
    rec.feasibleCount = static_cast<int>(feasibleIdx.size());
    rec.infeasibleCount = static_cast<int>(infeasibleIdx.size());
    const std::vector<std::size_t> feasibleRanked =
        bestFirst(population, feasibleIdx, true);
    const std::vector<std::size_t> infeasibleRanked =
        bestFirst(population, infeasibleIdx, false);
    if (!feasibleRanked.empty()) {
      double sum = 0.0;
      for (std::size_t i : feasibleIdx) sum += *population[i].feasibleFitness;
      rec.meanFeasibleFitness = sum / static_cast<double>(feasibleIdx.size());
      rec.best = population[feasibleRanked.front()];
      rec.maxFeasibleFitness = *rec.best.feasibleFitness;
      if (!bestFeasible || *rec.best.feasibleFitness > *bestFeasible->feasibleFitness) {
        bestFeasible = rec.best;
      }
    } else {
      rec.best = population[infeasibleRanked.front()];
    }
    if (!infeasibleRanked.empty()) {
      const Chromosome& top = population[infeasibleRanked.front()];
      if (!bestInfeasible ||
          *top.infeasibleFitness > *bestInfeasible->infeasibleFitness) {
        bestInfeasible = top;
      }
    }
    if (sink) sink(rec);
    result.stats.perGeneration.push_back(std::move(rec));
    if (gen == cfg.generations) break;

    std::vector<Chromosome> next;
    next.reserve(n);
    for (std::size_t i : feasibleRanked) {
      if (next.size() >= static_cast<std::size_t>(cfg.elitism)) break;
      next.push_back(population[i]);
    }
    for (std::size_t i : infeasibleRanked) {
      if (next.size() >= static_cast<std::size_t>(cfg.elitism)) break;
      next.push_back(population[i]);
    }

    std::vector<double> feasibleFit, infeasibleFit;
    for (std::size_t i : feasibleIdx) feasibleFit.push_back(*population[i].feasibleFitness);
    for (std::size_t i : infeasibleIdx) {
      infeasibleFit.push_back(*population[i].infeasibleFitness);
    }

    while (next.size() < n) {
      const bool fromFeasible = rng.below(n) < feasibleIdx.size();
      const auto& members = fromFeasible ? feasibleIdx : infeasibleIdx;
      const auto& fit = fromFeasible ? feasibleFit : infeasibleFit;
      const Chromosome& p1 = population[members[rankSelectIndex(fit, rng)]];
      const Chromosome& p2 = population[members[rankSelectIndex(fit, rng)]];
      auto [c1, c2] = rng.chance(cfg.crossoverRate)
                          ? twoPointCrossover(p1, p2, rng)
                          : std::pair<Chromosome, Chromosome>{p1, p2};
      for (Chromosome* child : {&c1, &c2}) {
        if (rng.chance(cfg.mutationRate)) *child = mutate(*child, pool, rng);
      }
      next.push_back(std::move(c1));
      if (next.size() < n) next.push_back(std::move(c2));
    }
    population = std::move(next);
  }

  result.best = bestFeasible ? *bestFeasible : *bestInfeasible;
  return result;
}

}  // namespace scenegen
