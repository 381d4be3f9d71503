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

// Scene builders and independent oracles shared by the unit tests and the
// acceptance runner.
#ifndef SCENEGEN_TESTS_SUPPORT_HPP_
#define SCENEGEN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "scenegen/agents.hpp"
#include "scenegen/simulator.hpp"
#include "scenegen/tile.hpp"

namespace scenegen::testing {

// 14 rows of '-' with Ground on rows 12 and 13.
inline std::vector<std::string> flatRows(int width) {
  std::vector<std::string> rows(kRows, std::string(static_cast<std::size_t>(width), '-'));
  rows[12] = rows[13] = std::string(static_cast<std::size_t>(width), 'X');
  return rows;
}

inline std::string joinRows(const std::vector<std::string>& rows) {
  std::string text;
  for (const std::string& r : rows) text += r + '\n';
  return text;
}

inline Scene sceneFromRows(const std::vector<std::string>& rows) {
  return Scene(parseLevel(joinRows(rows)));
}

inline void wall(std::vector<std::string>& rows, int col, int height) {
  for (int r = 12 - height; r < 12; ++r) rows[r][col] = 'X';
}

inline void gap(std::vector<std::string>& rows, int first, int width) {
  for (int c = first; c < first + width; ++c) rows[12][c] = rows[13][c] = '-';
}

// Highest rise of the feet, in tiles, when jump is held for holdTicks ticks
// from standing on flat ground.
inline double jumpApex(int holdTicks, const PhysicsConfig& cfg) {
  const FixedPhysics phys = FixedPhysics::from(cfg);
  SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), phys);
  const Milli start = s.avatar.y;
  Milli top = start;
  for (int t = 0; t < 200; ++t) {
    ActionInput in;
    in.jump = t < holdTicks;
    advance(s, in, phys);
    top = std::min(top, s.avatar.y);
    if (t > 0 && s.avatar.onGround) break;
  }
  return toTiles(start - top);
}

// Runs (or walks) at a gap of gapWidth columns starting at column 6 and
// jumps with a full hold once the centre reaches the ledge. Returns the end
// status.
inline Status scriptedGapJump(int gapWidth, bool run, const PhysicsConfig& cfg) {
  auto rows = flatRows(kSceneWidth);
  const int first = 6;
  gap(rows, first, gapWidth);
  const FixedPhysics phys = FixedPhysics::from(cfg);
  SimState s = initSim(sceneFromRows(rows), phys);
  int held = -1;
  for (int t = 0; t < 400 && s.status == Status::Running; ++t) {
    ActionInput in;
    in.right = true;
    in.run = run;
    if (held < 0 && s.avatar.x >= first * kTileMilli) held = 0;
    if (held >= 0 && held < cfg.maxJumpHoldTicks) {
      in.jump = true;
      ++held;
    }
    advance(s, in, phys);
  }
  return s.status;
}

// Every field of the state that can influence the future, tick excluded.
inline std::string exactKey(const SimState& s) {
  std::string key;
  auto put = [&](const auto& v) {
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  };
  const AvatarState& a = s.avatar;
  put(a.x), put(a.y), put(a.vx), put(a.vy), put(a.onGround);
  put(a.jumpHoldRemaining), put(a.jumpHeldTicks), put(a.alive);
  for (const EnemyState& e : s.enemies) {
    put(e.kind), put(e.x), put(e.y), put(e.vx), put(e.vy), put(e.alive);
  }
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < s.scene.width(); ++c) put(s.scene.at(r, c));
  }
  return key;
}

// Upper bound on how far right the avatar can move in `ticks` ticks from
// horizontal speed vx. Speed rises by at most one acceleration step per tick
// (or jumps to the wall-jump push) and never climbs past the agent's cap.
inline Milli maxAdvance(Milli vx, int ticks, const FixedPhysics& p, bool canRun) {
  const Milli accel = std::max(p.groundAccel, p.airAccel);
  const Milli push = p.wallJumpEnabled ? p.wallJumpImpulseX : 0;
  const Milli cap = canRun ? p.runMaxSpeed : p.walkMaxSpeed;
  Milli total = 0;
  for (int i = 0; i < ticks; ++i) {
    vx = std::max(push, vx > cap ? vx : std::min(vx + accel, cap));
    total += vx;
  }
  return total;
}

// Breadth-first search over exact states: is there an input sequence of at
// most maxTicks ticks that wins? Branches that cannot reach the goal even
// under maxAdvance are cut.
inline bool winWithin(const SimState& start, const AgentCapabilities& caps,
                      const PhysicsConfig& cfg, int maxTicks) {
  const FixedPhysics phys = FixedPhysics::from(cfg);
  const Milli goal = start.scene.width() * kTileMilli;
  const std::vector<ActionInput> actions = actionSet(caps);
  std::vector<SimState> layer{start};
  std::unordered_set<std::string> seen{exactKey(start)};
  for (int depth = 0; depth < maxTicks; ++depth) {
    std::vector<SimState> next;
    for (const SimState& s : layer) {
      if (s.avatar.x + maxAdvance(s.avatar.vx, maxTicks - depth, phys, caps.canRun) < goal) continue;
      for (const ActionInput raw : actions) {
        SimState child = s;
        advance(child, clampInput(raw, s.avatar, caps), phys);
        if (child.status == Status::Win) return true;
        if (child.status != Status::Running) continue;
        if (seen.insert(exactKey(child)).second) next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return false;
}

// Fewest ticks to win by exhaustive search, up to limit.
inline std::optional<int> bfsMinTicks(const SimState& start, const AgentCapabilities& caps,
                                      const PhysicsConfig& cfg, int limit) {
  for (int d = 1; d <= limit; ++d) {
    if (winWithin(start, caps, cfg, d)) return d;
  }
  return std::nullopt;
}

}  // namespace scenegen::testing

#endif  // SCENEGEN_TESTS_SUPPORT_HPP_
