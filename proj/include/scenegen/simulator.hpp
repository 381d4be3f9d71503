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

#ifndef SCENEGEN_SIMULATOR_HPP_
#define SCENEGEN_SIMULATOR_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scenegen/tile.hpp"

namespace scenegen {

// Positions and velocities are integer thousandths of a tile (per tick).
// Integer arithmetic keeps collision snapping exact and trajectories
// bit-identical everywhere.
using Milli = std::int32_t;
inline constexpr Milli kTileMilli = 1000;
// Avatar and enemies share a 0.8 x 0.8 box centred on x whose bottom edge
// is y.
inline constexpr Milli kBodyMilli = 800;
inline constexpr Milli kHalfBody = kBodyMilli / 2;

inline constexpr int kSceneWidth = 18;

constexpr double toTiles(Milli v) { return static_cast<double>(v) / kTileMilli; }
Milli toMilli(double tiles);

class InvalidConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoSpawnSurfaceError : public std::runtime_error {
 public:
  NoSpawnSurfaceError()
      : std::runtime_error("column 0 has no solid tile to spawn on") {}
};

// All speeds in tiles/tick, accelerations in tiles/tick^2. Values are
// rounded to the nearest 1/1000 tile when the simulation runs.
struct PhysicsConfig {
  double gravity = 0.18;
  double jumpImpulse = -0.70;
  double jumpHoldGravity = 0.03;
  int maxJumpHoldTicks = 9;
  double walkMaxSpeed = 0.15;
  double runMaxSpeed = 0.30;
  double groundAccel = 0.03;
  double airAccel = 0.02;
  double friction = 0.05;
  double enemySpeed = 0.05;
  double stompBounce = 0.3;
  int tickLimit = 1000;
  bool wallJumpEnabled = true;
  double wallJumpImpulseX = 0.25;

  // Throws InvalidConfigError.
  void validate() const;
};

// PhysicsConfig converted to fixed point once per simulation.
struct FixedPhysics {
  Milli gravity, jumpImpulse, jumpHoldGravity;
  int maxJumpHoldTicks;
  Milli walkMaxSpeed, runMaxSpeed, groundAccel, airAccel, friction;
  Milli enemySpeed, stompBounce;
  int tickLimit;
  bool wallJumpEnabled;
  Milli wallJumpImpulseX;

  static FixedPhysics from(const PhysicsConfig& cfg);
};

// Scene grid with fixed storage so that copying a SimState never allocates
// for the tiles. Width is 1..18; 18 everywhere except in test mini-scenes.
class Scene {
 public:
  Scene() = default;
  // Throws std::invalid_argument if the grid is wider than 18.
  explicit Scene(const TileGrid& grid);

  int width() const { return width_; }
  Tile at(int row, int col) const { return tiles_[row * kSceneWidth + col]; }
  void set(int row, int col, Tile t) { tiles_[row * kSceneWidth + col] = t; }

  // Outside the grid: columns left of 0 are a solid wall, everything else
  // (above, below, right of the scene) is open.
  bool solidAt(int row, int col) const {
    if (col < 0) return true;
    if (row < 0 || row >= kRows || col >= width_) return false;
    return isSolid(at(row, col));
  }

  TileGrid toGrid() const;

  friend bool operator==(const Scene&, const Scene&) = default;

 private:
  std::array<Tile, kRows * kSceneWidth> tiles_{};
  int width_ = 0;
};

struct AvatarState {
  Milli x = 0;  // centre
  Milli y = 0;  // feet; grows downward
  Milli vx = 0;
  Milli vy = 0;
  bool onGround = false;
  int jumpHoldRemaining = 0;
  // Consecutive ticks the jump input has been held; 0 means a press next
  // tick is fresh.
  int jumpHeldTicks = 0;
  bool alive = true;

  friend bool operator==(const AvatarState&, const AvatarState&) = default;
};

enum class EnemyKind : std::uint8_t { Goomba, RedKoopa };

struct EnemyState {
  EnemyKind kind = EnemyKind::Goomba;
  Milli x = 0;
  Milli y = 0;
  Milli vx = 0;
  Milli vy = 0;
  bool alive = true;

  friend bool operator==(const EnemyState&, const EnemyState&) = default;
};

enum class Status : std::uint8_t { Running, Win, LoseDeath, LoseTimeout };

std::string_view statusName(Status s);

struct ActionInput {
  bool left = false;
  bool right = false;
  bool jump = false;
  bool run = false;

  // left=1, right=2, jump=4, run=8.
  std::uint8_t bits() const {
    return static_cast<std::uint8_t>((left ? 1 : 0) | (right ? 2 : 0) |
                                     (jump ? 4 : 0) | (run ? 8 : 0));
  }
  static ActionInput fromBits(std::uint8_t b) {
    return {(b & 1) != 0, (b & 2) != 0, (b & 4) != 0, (b & 8) != 0};
  }

  friend bool operator==(const ActionInput&, const ActionInput&) = default;
};

struct SimState {
  Scene scene;
  AvatarState avatar;
  std::vector<EnemyState> enemies;
  int tick = 0;
  Status status = Status::Running;
  Milli maxXReached = 0;

  friend bool operator==(const SimState&, const SimState&) = default;
};

// Avatar stands centred in column 0 on its topmost solid tile; enemy markers
// become EnemyState entries walking left and their cells become Empty.
SimState initSim(const Scene& scene, const PhysicsConfig& cfg);
SimState initSim(const Scene& scene, const FixedPhysics& phys);

// One tick. No-op on a terminal state.
void advance(SimState& state, ActionInput input, const FixedPhysics& phys);

inline SimState step(SimState state, ActionInput input, const PhysicsConfig& cfg) {
  advance(state, input, FixedPhysics::from(cfg));
  return state;
}

// Furthest x reached as a fraction of the scene width.
double progress(const SimState& state);

// 14 lines of width characters: scene tiles, live enemies, and 'M'.
std::string renderAscii(const SimState& state);

// Replay trace CSV.
inline constexpr std::string_view kTraceHeader = "tick,x,y,vx,vy,actionBits,status";
std::string traceLine(const SimState& after, ActionInput input);
std::string formatMilli(Milli v);

}  // namespace scenegen

#endif  // SCENEGEN_SIMULATOR_HPP_
