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

#include "scenegen/agents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scenegen {

AgentCapabilities AgentCapabilities::perfect() {
  return {"B", std::nullopt, true, true};
}
AgentCapabilities AgentCapabilities::limitedJump() { return {"LJ", 2, true, true}; }
AgentCapabilities AgentCapabilities::enemyBlind() {
  return {"EB", std::nullopt, false, true};
}
AgentCapabilities AgentCapabilities::noRun() {
  return {"NR", std::nullopt, true, false};
}

AgentCapabilities AgentCapabilities::byName(std::string_view name) {
  if (name == "B") return perfect();
  if (name == "LJ") return limitedJump();
  if (name == "EB") return enemyBlind();
  if (name == "NR") return noRun();
  throw std::invalid_argument("unknown agent '" + std::string(name) +
                              "' (expected B, LJ, EB or NR)");
}

void SearchConfig::validate() const {
  if (nodeBudget < 1) throw InvalidConfigError("nodeBudget must be at least 1");
  if (replanInterval < 1) {
    throw InvalidConfigError("replanInterval must be at least 1");
  }
  if (!(xyGrain > 0) || !(vGrain > 0)) {
    throw InvalidConfigError("quantization grains must be positive");
  }
  if (stallTicks < 0) throw InvalidConfigError("stallTicks must be non-negative");
}

namespace {

Milli topSpeed(const AgentCapabilities& caps, const FixedPhysics& p) {
  return caps.canRun ? p.runMaxSpeed : p.walkMaxSpeed;
}

double heuristicTicks(const SimState& s, Milli speed) {
  const Milli remaining = s.scene.width() * kTileMilli - s.avatar.x;
  if (remaining <= 0) return 0.0;
  return static_cast<double>(remaining) / speed;
}

struct StateKey {
  std::int32_t qx, qy, qvx, qvy;
  std::int32_t hold, held;
  bool onGround;
  std::uint64_t enemies;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = 0;
    for (std::int64_t v : {k.qx, k.qy, k.qvx, k.qvy, k.hold, k.held}) {
      h = mix(h, static_cast<std::uint64_t>(v));
    }
    h = mix(h, k.onGround ? 1 : 0);
    return static_cast<std::size_t>(mix(h, k.enemies));
  }
};

class KeyMaker {
 public:
  KeyMaker(const SearchConfig& search, const AgentCapabilities& caps)
      : pos_(search.xyGrain * kTileMilli),
        vel_(search.vGrain * kTileMilli),
        heldCap_(caps.maxJumpHoldTicks ? *caps.maxJumpHoldTicks : 1) {}

  StateKey operator()(const SimState& s) const {
    const AvatarState& a = s.avatar;
    std::uint64_t enemies = 0x51ed270b;
    for (const EnemyState& e : s.enemies) {
      if (!e.alive) continue;
      enemies = mix(enemies, static_cast<std::uint64_t>(q(e.x, pos_)));
      enemies = mix(enemies, static_cast<std::uint64_t>(q(e.y, pos_)));
    }
    return {q(a.x, pos_),
            q(a.y, pos_),
            q(a.vx, vel_),
            q(a.vy, vel_),
            a.jumpHoldRemaining,
            std::min(a.jumpHeldTicks, heldCap_),
            a.onGround,
            enemies};
  }

 private:
  static std::int32_t q(Milli v, double grain) {
    return static_cast<std::int32_t>(std::floor(v / grain));
  }

  double pos_;
  double vel_;
  int heldCap_;
};

struct FrontierEntry {
  double f;
  Milli x;
  std::uint64_t seq;
  int parent;  // index into expanded nodes, -1 for the root
  std::uint8_t action;
  int g;
};

// Priority: lower f first, then larger x, then earlier insertion.
struct FrontierWorse {
  bool operator()(const FrontierEntry& a, const FrontierEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.x != b.x) return a.x < b.x;
    return a.seq > b.seq;
  }
};

struct ExpandedNode {
  SimState state;
  int parent;
  std::uint8_t action;
};

std::vector<ActionInput> pathTo(const std::vector<ExpandedNode>& nodes, int idx) {
  std::vector<ActionInput> path;
  for (; idx > 0; idx = nodes[idx].parent) {
    path.push_back(ActionInput::fromBits(nodes[idx].action));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

double heuristic(const SimState& state, const AgentCapabilities& caps,
                 const PhysicsConfig& cfg) {
  return heuristicTicks(state, topSpeed(caps, FixedPhysics::from(cfg)));
}

ActionInput clampInput(ActionInput input, const AvatarState& avatar,
                       const AgentCapabilities& caps) {
  if (!caps.canRun) input.run = false;
  if (input.jump && caps.maxJumpHoldTicks &&
      avatar.jumpHeldTicks >= *caps.maxJumpHoldTicks) {
    input.jump = false;
  }
  return input;
}

std::vector<ActionInput> actionSet(const AgentCapabilities& caps) {
  std::vector<ActionInput> out;
  for (int dir : {1, 0, -1}) {
    for (bool jump : {true, false}) {
      for (bool run : {true, false}) {
        if (run && !caps.canRun) continue;
        out.push_back({dir < 0, dir > 0, jump, run});
      }
    }
  }
  return out;
}

Plan planActions(const SimState& view, const AgentCapabilities& caps,
                 const PhysicsConfig& cfg, const SearchConfig& search) {
  if (view.status != Status::Running) {
    throw std::invalid_argument("planActions: no action available from a terminal state");
  }
  const FixedPhysics phys = FixedPhysics::from(cfg);
  const Milli speed = topSpeed(caps, phys);
  const KeyMaker keyOf(search, caps);
  const std::vector<ActionInput> actions = actionSet(caps);

  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, FrontierWorse> open;
  std::unordered_set<StateKey, StateKeyHash> closed;
  closed.reserve(static_cast<std::size_t>(search.nodeBudget) * 2);
  // Lowest g at which each key has been queued; worse duplicates are dropped.
  std::unordered_map<StateKey, int, StateKeyHash> queuedAt;
  queuedAt.reserve(static_cast<std::size_t>(search.nodeBudget) * 4);
  std::vector<ExpandedNode> nodes;
  nodes.reserve(static_cast<std::size_t>(search.nodeBudget));

  std::uint64_t seq = 0;
  open.push({heuristicTicks(view, speed), view.avatar.x, seq++, -1, 0, 0});

  Plan plan;
  std::vector<std::uint8_t> tried;
  while (!open.empty() && plan.expansions < search.nodeBudget) {
    const FrontierEntry top = open.top();
    open.pop();
    SimState state = top.parent < 0 ? view : nodes[top.parent].state;
    if (top.parent >= 0) {
      advance(state, ActionInput::fromBits(top.action), phys);
    }
    if (!closed.insert(keyOf(state)).second) continue;

    const int idx = static_cast<int>(nodes.size());
    nodes.push_back({std::move(state), top.parent, top.action});
    ++plan.expansions;

    tried.clear();
    for (const ActionInput raw : actions) {
      const SimState& here = nodes[idx].state;
      const ActionInput a = clampInput(raw, here.avatar, caps);
      if (std::find(tried.begin(), tried.end(), a.bits()) != tried.end()) continue;
      tried.push_back(a.bits());

      SimState child = here;
      advance(child, a, phys);
      if (child.status == Status::Win) {
        plan.actions = pathTo(nodes, idx);
        plan.actions.push_back(a);
        plan.reachesWin = true;
        return plan;
      }
      if (child.status != Status::Running) continue;
      const StateKey key = keyOf(child);
      if (closed.contains(key)) continue;
      auto [slot, fresh] = queuedAt.try_emplace(key, top.g + 1);
      if (!fresh) {
        if (slot->second <= top.g + 1) continue;
        slot->second = top.g + 1;
      }
      open.push({top.g + 1 + heuristicTicks(child, speed), child.avatar.x, seq++,
                 idx, a.bits(), top.g + 1});
    }
  }

  // Budget exhausted (or nothing left to expand): best frontier node.
  while (!open.empty()) {
    const FrontierEntry top = open.top();
    open.pop();
    if (top.parent < 0) continue;
    SimState s = nodes[top.parent].state;
    advance(s, ActionInput::fromBits(top.action), phys);
    if (closed.contains(keyOf(s))) continue;
    plan.actions = pathTo(nodes, top.parent);
    plan.actions.push_back(ActionInput::fromBits(top.action));
    return plan;
  }
  // Frontier empty: deepest-progress expanded node by the same ordering.
  int best = 0;
  for (int i = 1; i < static_cast<int>(nodes.size()); ++i) {
    const SimState& a = nodes[i].state;
    const SimState& b = nodes[best].state;
    const double fa = a.tick - view.tick + heuristicTicks(a, speed);
    const double fb = b.tick - view.tick + heuristicTicks(b, speed);
    if (fa < fb || (fa == fb && a.avatar.x > b.avatar.x)) best = i;
  }
  plan.actions = pathTo(nodes, best);
  if (plan.actions.empty()) plan.actions.push_back(ActionInput{});
  return plan;
}

PlayResult playScene(const Scene& scene, const AgentCapabilities& caps,
                     const PhysicsConfig& cfg, const SearchConfig& search) {
  const FixedPhysics phys = FixedPhysics::from(cfg);
  SimState truth = initSim(scene, phys);
  PlayResult result;
  Milli bestX = truth.maxXReached;
  int bestTick = 0;

  while (truth.status == Status::Running) {
    SimState view = truth;
    if (!caps.seesEnemies) view.enemies.clear();
    const Plan plan = planActions(view, caps, cfg, search);
    const std::size_t n =
        std::min<std::size_t>(plan.actions.size(), search.replanInterval);
    for (std::size_t i = 0; i < n && truth.status == Status::Running; ++i) {
      const ActionInput a = clampInput(plan.actions[i], truth.avatar, caps);
      advance(truth, a, phys);
      result.actions.push_back(a);
    }
    if (truth.maxXReached > bestX) {
      bestX = truth.maxXReached;
      bestTick = truth.tick;
    }
    if (search.stallTicks > 0 && truth.status == Status::Running &&
        truth.tick - bestTick >= search.stallTicks) {
      truth.status = Status::LoseTimeout;
    }
  }
  result.status = truth.status;
  result.progress = progress(truth);
  result.ticks = truth.tick;
  return result;
}

std::string traceCsv(const Scene& scene, const PhysicsConfig& cfg,
                     const AgentCapabilities& caps, const PlayResult& result) {
  const FixedPhysics phys = FixedPhysics::from(cfg);
  SimState s = initSim(scene, phys);
  std::string out = "# agent: " + caps.name + "\n";
  out += kTraceHeader;
  out += '\n';
  for (const ActionInput& a : result.actions) {
    advance(s, a, phys);
    out += traceLine(s, a);
    out += '\n';
  }
  return out;
}

}  // namespace scenegen
