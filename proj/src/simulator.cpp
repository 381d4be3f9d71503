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

#include "scenegen/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace scenegen {

namespace {

constexpr int floorDiv(int a, int b) {
  int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

constexpr int ceilDiv(int a, int b) { return -floorDiv(-a, b); }

constexpr Milli approach(Milli v, Milli target, Milli delta) {
  if (v < target) return std::min(v + delta, target);
  if (v > target) return std::max(v - delta, target);
  return v;
}

// Rows covered by a body whose feet are at y.
struct Span {
  int lo, hi;
};
constexpr Span rowsOf(Milli y) {
  return {floorDiv(y - kBodyMilli, kTileMilli), floorDiv(y - 1, kTileMilli)};
}
constexpr Span colsOf(Milli x) {
  return {floorDiv(x - kHalfBody, kTileMilli),
          floorDiv(x + kHalfBody - 1, kTileMilli)};
}

bool columnBlocked(const Scene& s, int col, Span rows) {
  for (int r = rows.lo; r <= rows.hi; ++r) {
    if (s.solidAt(r, col)) return true;
  }
  return false;
}

bool rowBlocked(const Scene& s, int row, Span cols) {
  for (int c = cols.lo; c <= cols.hi; ++c) {
    if (s.solidAt(row, c)) return true;
  }
  return false;
}

// Moves a body (centre x) horizontally by dx, stopping flush against the
// first solid column. Returns true when blocked.
bool sweepX(const Scene& s, Milli& x, Milli y, Milli dx) {
  const Span rows = rowsOf(y);
  if (dx > 0) {
    const Milli r0 = x + kHalfBody;
    for (int c = ceilDiv(r0, kTileMilli); c * kTileMilli < r0 + dx; ++c) {
      if (columnBlocked(s, c, rows)) {
        x = c * kTileMilli - kHalfBody;
        return true;
      }
    }
  } else if (dx < 0) {
    const Milli l0 = x - kHalfBody;
    for (int k = floorDiv(l0, kTileMilli); k * kTileMilli > l0 + dx; --k) {
      if (columnBlocked(s, k - 1, rows)) {
        x = k * kTileMilli + kHalfBody;
        return true;
      }
    }
  }
  x += dx;
  return false;
}

// Falling: returns true when the feet land on a row top.
bool sweepDown(const Scene& s, Milli x, Milli& y, Milli dy) {
  const Span cols = colsOf(x);
  for (int r = ceilDiv(y, kTileMilli); r * kTileMilli < y + dy; ++r) {
    if (rowBlocked(s, r, cols)) {
      y = r * kTileMilli;
      return true;
    }
  }
  y += dy;
  return false;
}

// Rising: returns the row the head hit, or -1.
int sweepUp(const Scene& s, Milli x, Milli& y, Milli dy) {
  const Span cols = colsOf(x);
  const Milli top = y - kBodyMilli;
  for (int k = floorDiv(top, kTileMilli); k * kTileMilli > top + dy; --k) {
    if (rowBlocked(s, k - 1, cols)) {
      y = k * kTileMilli + kBodyMilli;
      return k - 1;
    }
  }
  y += dy;
  return -1;
}

bool supported(const Scene& s, Milli x, Milli y) {
  return y % kTileMilli == 0 && rowBlocked(s, y / kTileMilli, colsOf(x));
}

bool overlaps(Milli ax, Milli ay, Milli bx, Milli by) {
  return ax < bx + kBodyMilli && bx < ax + kBodyMilli &&
         ay - kBodyMilli < by && by - kBodyMilli < ay;
}

// Wall contact for wall jumps ignores the virtual wall left of column 0.
bool touchesWall(const Scene& s, Milli x, Milli y, int side) {
  const Span rows = rowsOf(y);
  if (side < 0) {
    const Milli left = x - kHalfBody;
    if (left % kTileMilli != 0) return false;
    const int col = left / kTileMilli - 1;
    return col >= 0 && columnBlocked(s, col, rows);
  }
  const Milli right = x + kHalfBody;
  if (right % kTileMilli != 0) return false;
  return columnBlocked(s, right / kTileMilli, rows);
}

void updateEnemy(EnemyState& e, const Scene& s, const FixedPhysics& p) {
  const bool grounded = supported(s, e.x, e.y);
  bool reverse = false;
  if (grounded && e.kind == EnemyKind::RedKoopa) {
    const Milli nx = e.x + e.vx;
    const int lead = e.vx > 0 ? floorDiv(nx + kHalfBody - 1, kTileMilli)
                              : floorDiv(nx - kHalfBody, kTileMilli);
    if (!s.solidAt(e.y / kTileMilli, lead)) reverse = true;
  }
  if (!reverse) reverse = sweepX(s, e.x, e.y, e.vx);
  if (reverse) e.vx = -e.vx;

  e.vy += p.gravity;
  if (e.vy > 0 && sweepDown(s, e.x, e.y, e.vy)) e.vy = 0;
  if (e.y > kRows * kTileMilli) e.alive = false;
}

}  // namespace

Milli toMilli(double tiles) {
  return static_cast<Milli>(std::llround(tiles * kTileMilli));
}

void PhysicsConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidConfigError(what);
  };
  require(gravity > jumpHoldGravity, "gravity must exceed jumpHoldGravity");
  require(jumpHoldGravity > 0, "jumpHoldGravity must be positive");
  require(runMaxSpeed > walkMaxSpeed, "runMaxSpeed must exceed walkMaxSpeed");
  require(walkMaxSpeed > 0, "walkMaxSpeed must be positive");
  require(jumpImpulse < 0, "jumpImpulse must be negative (upward)");
  require(tickLimit >= 1, "tickLimit must be at least 1");
  require(maxJumpHoldTicks >= 0, "maxJumpHoldTicks must be non-negative");
  require(groundAccel > 0 && airAccel > 0 && friction > 0,
          "accelerations and friction must be positive");
  require(enemySpeed >= 0 && stompBounce >= 0 && wallJumpImpulseX >= 0,
          "enemySpeed, stompBounce and wallJumpImpulseX must be non-negative");
}

FixedPhysics FixedPhysics::from(const PhysicsConfig& c) {
  return {toMilli(c.gravity),       toMilli(c.jumpImpulse),
          toMilli(c.jumpHoldGravity), c.maxJumpHoldTicks,
          toMilli(c.walkMaxSpeed),  toMilli(c.runMaxSpeed),
          toMilli(c.groundAccel),   toMilli(c.airAccel),
          toMilli(c.friction),      toMilli(c.enemySpeed),
          toMilli(c.stompBounce),   c.tickLimit,
          c.wallJumpEnabled,        toMilli(c.wallJumpImpulseX)};
}

Scene::Scene(const TileGrid& grid) : width_(grid.width()) {
  if (grid.width() < 1 || grid.width() > kSceneWidth) {
    throw std::invalid_argument("scene width must be 1.." +
                                std::to_string(kSceneWidth) + ", got " +
                                std::to_string(grid.width()));
  }
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < width_; ++c) set(r, c, grid.at(r, c));
  }
}

TileGrid Scene::toGrid() const {
  TileGrid g(width_);
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < width_; ++c) g.set(r, c, at(r, c));
  }
  return g;
}

std::string_view statusName(Status s) {
  switch (s) {
    case Status::Running: return "Running";
    case Status::Win: return "Win";
    case Status::LoseDeath: return "LoseDeath";
    case Status::LoseTimeout: return "LoseTimeout";
  }
  return "?";
}

SimState initSim(const Scene& scene, const PhysicsConfig& cfg) {
  return initSim(scene, FixedPhysics::from(cfg));
}

SimState initSim(const Scene& scene, const FixedPhysics& phys) {
  SimState st;
  st.scene = scene;
  int spawnRow = -1;
  for (int r = 0; r < kRows; ++r) {
    if (isSolid(scene.at(r, 0))) {
      spawnRow = r;
      break;
    }
  }
  if (spawnRow < 0) throw NoSpawnSurfaceError();
  st.avatar.x = kTileMilli / 2;
  st.avatar.y = spawnRow * kTileMilli;
  st.avatar.onGround = true;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < scene.width(); ++c) {
      const Tile t = scene.at(r, c);
      if (!isEnemyMarker(t)) continue;
      EnemyState e;
      e.kind = t == Tile::EnemyGoomba ? EnemyKind::Goomba : EnemyKind::RedKoopa;
      e.x = c * kTileMilli + kTileMilli / 2;
      e.y = (r + 1) * kTileMilli;
      e.vx = -phys.enemySpeed;
      st.enemies.push_back(e);
      st.scene.set(r, c, Tile::Empty);
    }
  }
  st.maxXReached = st.avatar.x;
  return st;
}

void advance(SimState& st, ActionInput in, const FixedPhysics& p) {
  if (st.status != Status::Running) return;
  AvatarState& a = st.avatar;
  Scene& scene = st.scene;

  // Horizontal intent.
  const int intent = (in.right ? 1 : 0) - (in.left ? 1 : 0);
  if (intent != 0) {
    const Milli cap = in.run ? p.runMaxSpeed : p.walkMaxSpeed;
    a.vx = approach(a.vx, intent * cap, a.onGround ? p.groundAccel : p.airAccel);
  } else {
    a.vx = approach(a.vx, 0, p.friction);
  }

  // Jump start and gravity.
  const bool fresh = in.jump && a.jumpHeldTicks == 0;
  bool groundJump = false;
  if (fresh && a.onGround) {
    a.vy = p.jumpImpulse;
    a.jumpHoldRemaining = p.maxJumpHoldTicks;
    a.onGround = false;
    groundJump = true;
  }
  if (!in.jump) a.jumpHoldRemaining = 0;
  if (in.jump && a.vy < 0 && a.jumpHoldRemaining > 0) {
    a.vy += p.jumpHoldGravity;
    --a.jumpHoldRemaining;
  } else {
    a.vy += p.gravity;
  }
  a.jumpHeldTicks = in.jump ? a.jumpHeldTicks + 1 : 0;

  // Movement, horizontal then vertical.
  const Milli startY = a.y;
  if (sweepX(scene, a.x, a.y, a.vx)) a.vx = 0;
  if (a.vy > 0) {
    a.onGround = sweepDown(scene, a.x, a.y, a.vy);
    if (a.onGround) a.vy = 0;
  } else if (a.vy < 0) {
    a.onGround = false;
    const int hit = sweepUp(scene, a.x, a.y, a.vy);
    if (hit >= 0) {
      a.vy = 0;
      const Span cols = colsOf(a.x);
      for (int c = std::max(cols.lo, 0); c <= cols.hi && c < scene.width(); ++c) {
        if (hit < kRows && scene.at(hit, c) == Tile::Question) {
          scene.set(hit, c, Tile::Brick);
        }
      }
    }
  } else {
    a.onGround = supported(scene, a.x, a.y);
  }

  // Wall jump.
  if (p.wallJumpEnabled && fresh && !groundJump && !a.onGround) {
    const bool wallLeft = touchesWall(scene, a.x, a.y, -1);
    const bool wallRight = touchesWall(scene, a.x, a.y, +1);
    if (wallLeft != wallRight) {
      a.vy = p.jumpImpulse;
      a.jumpHoldRemaining = p.maxJumpHoldTicks;
      a.vx = wallLeft ? p.wallJumpImpulseX : -p.wallJumpImpulseX;
    }
  }

  for (EnemyState& e : st.enemies) {
    if (e.alive) updateEnemy(e, scene, p);
  }

  // Avatar against enemies: stomp from above, anything else is fatal.
  bool hurt = false;
  bool stomped = false;
  const bool descending = a.y > startY;
  for (EnemyState& e : st.enemies) {
    if (!e.alive || !overlaps(a.x, a.y, e.x, e.y)) continue;
    if (descending && startY <= e.y - kBodyMilli / 2) {
      e.alive = false;
      stomped = true;
    } else {
      hurt = true;
    }
  }
  if (stomped && !hurt) {
    a.vy = -p.stompBounce;
    a.onGround = false;
  }

  // Coins.
  {
    const Span rows = rowsOf(a.y);
    const Span cols = colsOf(a.x);
    for (int r = std::max(rows.lo, 0); r <= rows.hi && r < kRows; ++r) {
      for (int c = std::max(cols.lo, 0); c <= cols.hi && c < scene.width(); ++c) {
        if (scene.at(r, c) == Tile::Coin) scene.set(r, c, Tile::Empty);
      }
    }
  }

  const Milli goal = scene.width() * kTileMilli;
  if (hurt) {
    st.status = Status::LoseDeath;
  } else if (a.x >= goal) {
    st.status = Status::Win;
  } else if (a.y > kRows * kTileMilli) {
    st.status = Status::LoseDeath;
  }
  if (st.status == Status::LoseDeath) a.alive = false;

  ++st.tick;
  st.maxXReached = std::max(st.maxXReached, std::min(a.x, goal));
  if (st.status == Status::Running && st.tick >= p.tickLimit) {
    st.status = Status::LoseTimeout;
  }
}

double progress(const SimState& st) {
  const double w = static_cast<double>(st.scene.width()) * kTileMilli;
  return std::min(static_cast<double>(st.maxXReached) / w, 1.0);
}

std::string renderAscii(const SimState& st) {
  const int w = st.scene.width();
  std::vector<std::string> rows(kRows, std::string(w, '-'));
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < w; ++c) rows[r][c] = tileChar(st.scene.at(r, c));
  }
  auto draw = [&](Milli x, Milli y, char ch) {
    const int col = floorDiv(x, kTileMilli);
    const int row = floorDiv(y - kBodyMilli / 2, kTileMilli);
    if (row >= 0 && row < kRows && col >= 0 && col < w) rows[row][col] = ch;
  };
  for (const EnemyState& e : st.enemies) {
    if (e.alive) {
      draw(e.x, e.y, tileChar(e.kind == EnemyKind::Goomba ? Tile::EnemyGoomba
                                                          : Tile::EnemyRedKoopa));
    }
  }
  if (st.avatar.alive && st.status != Status::Win) draw(st.avatar.x, st.avatar.y, 'M');
  std::string out;
  for (const auto& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string formatMilli(Milli v) {
  char buf[32];
  const long long mag = v < 0 ? -static_cast<long long>(v) : v;
  std::snprintf(buf, sizeof buf, "%s%lld.%03lld", v < 0 ? "-" : "", mag / 1000,
                mag % 1000);
  return buf;
}

std::string traceLine(const SimState& after, ActionInput input) {
  const AvatarState& a = after.avatar;
  std::string line = std::to_string(after.tick);
  for (Milli v : {a.x, a.y, a.vx, a.vy}) {
    line += ',';
    line += formatMilli(v);
  }
  line += ',';
  line += std::to_string(input.bits());
  line += ',';
  line += statusName(after.status);
  return line;
}

}  // namespace scenegen
