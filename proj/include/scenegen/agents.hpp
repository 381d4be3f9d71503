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

#ifndef SCENEGEN_AGENTS_HPP_
#define SCENEGEN_AGENTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scenegen/simulator.hpp"

namespace scenegen {

// What a planning agent is allowed to do and to see. The same mask limits
// the planner's action set and clamps the inputs the executor sends to the
// true world.
struct AgentCapabilities {
  std::string name;
  // Longest run of consecutive jump-held ticks; nullopt means unlimited.
  std::optional<int> maxJumpHoldTicks;
  bool seesEnemies = true;
  bool canRun = true;

  static AgentCapabilities perfect();       // "B"
  static AgentCapabilities limitedJump();   // "LJ": hold capped at 2 ticks
  static AgentCapabilities enemyBlind();    // "EB"
  static AgentCapabilities noRun();         // "NR"
  // Throws std::invalid_argument for names other than B, LJ, EB, NR.
  static AgentCapabilities byName(std::string_view name);
};

struct SearchConfig {
  int nodeBudget = 20000;   // expansions per replan
  int replanInterval = 4;   // ticks executed between replans
  double xyGrain = 1.0 / 64;  // tiles
  double vGrain = 1.0 / 64;   // tiles/tick
  // End the episode as LoseTimeout when maxXReached has not grown for this
  // many ticks. 0 disables the check.
  int stallTicks = 200;

  void validate() const;
};

struct PlayResult {
  Status status = Status::Running;
  double progress = 0.0;
  int ticks = 0;
  std::vector<ActionInput> actions;
};

struct Plan {
  std::vector<ActionInput> actions;
  bool reachesWin = false;
  int expansions = 0;
};

// Lower bound on ticks to the right edge: distance at the agent's top speed.
double heuristic(const SimState& state, const AgentCapabilities& caps,
                 const PhysicsConfig& cfg);

// Drops inputs the agent cannot produce: run without canRun, and jump once
// the current hold has lasted maxJumpHoldTicks.
ActionInput clampInput(ActionInput input, const AvatarState& avatar,
                       const AgentCapabilities& caps);

// The agent's distinct inputs, in expansion order.
std::vector<ActionInput> actionSet(const AgentCapabilities& caps);

// A* from worldView with g = ticks and h = heuristic. Returns the path to the
// first Win found, otherwise the path to the best frontier node (lowest f,
// then larger x, then FIFO) once the expansion budget runs out. Dying and
// timed-out states are never expanded. Throws std::invalid_argument when
// worldView is already terminal.
Plan planActions(const SimState& worldView, const AgentCapabilities& caps,
                 const PhysicsConfig& cfg, const SearchConfig& search);

// Replanning loop in the true world. Enemy-blind agents plan on a copy of the
// state with every enemy removed. Throws NoSpawnSurfaceError.
PlayResult playScene(const Scene& scene, const AgentCapabilities& caps,
                     const PhysicsConfig& cfg, const SearchConfig& search);

// Replays result.actions from initSim and renders the trace CSV, preceded by
// a "# agent: <name>" line.
std::string traceCsv(const Scene& scene, const PhysicsConfig& cfg,
                     const AgentCapabilities& caps, const PlayResult& result);

}  // namespace scenegen

#endif  // SCENEGEN_AGENTS_HPP_
