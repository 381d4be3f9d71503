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

#include <gtest/gtest.h>

#include "scenegen/rng.hpp"
#include "scenegen/simulator.hpp"
#include "support.hpp"

namespace scenegen {
namespace {

using testing::flatRows;
using testing::sceneFromRows;

const PhysicsConfig kCfg;
const FixedPhysics kPhys = FixedPhysics::from(kCfg);

ActionInput input(bool right, bool jump = false, bool run = false) {
  ActionInput in;
  in.right = right;
  in.jump = jump;
  in.run = run;
  return in;
}

TEST(Calibration, FullHoldApexBetweenFourAndSixTiles) {
  const double apex = testing::jumpApex(kCfg.maxJumpHoldTicks, kCfg);
  EXPECT_GE(apex, 4.0);
  EXPECT_LT(apex, 6.0);
}

TEST(Calibration, TwoTickHoldApexAtMostTwoAndAHalf) {
  EXPECT_LE(testing::jumpApex(2, kCfg), 2.5);
}

TEST(Calibration, RunJumpClearsFourGap) {
  EXPECT_EQ(testing::scriptedGapJump(4, true, kCfg), Status::Win);
}

TEST(Calibration, WalkJumpFallsIntoFourGap) {
  EXPECT_EQ(testing::scriptedGapJump(4, false, kCfg), Status::LoseDeath);
}

TEST(InitSim, FeetOnTopOfGround) {
  auto rows = flatRows(kSceneWidth);
  rows[12] = std::string(kSceneWidth, '-');
  const SimState s = initSim(sceneFromRows(rows), kCfg);
  EXPECT_EQ(s.avatar.y, 13 * kTileMilli);
  EXPECT_EQ(s.avatar.x, kTileMilli / 2);
  EXPECT_TRUE(s.avatar.onGround);
}

TEST(InitSim, StandsOnHighestSolidTile) {
  auto rows = flatRows(kSceneWidth);
  rows[12][0] = '-';
  rows[7][0] = 'X';
  EXPECT_EQ(initSim(sceneFromRows(rows), kCfg).avatar.y, 7 * kTileMilli);
}

TEST(InitSim, EmptyFirstColumnThrows) {
  auto rows = flatRows(kSceneWidth);
  testing::gap(rows, 0, 1);
  EXPECT_THROW(initSim(sceneFromRows(rows), kCfg), NoSpawnSurfaceError);
}

TEST(InitSim, EnemyMarkersBecomeEnemies) {
  auto rows = flatRows(kSceneWidth);
  rows[11][9] = 'E';
  rows[11][12] = 'R';
  const SimState s = initSim(sceneFromRows(rows), kCfg);
  ASSERT_EQ(s.enemies.size(), 2u);
  EXPECT_EQ(s.enemies[0].kind, EnemyKind::Goomba);
  EXPECT_EQ(s.enemies[0].x, 9500);
  EXPECT_EQ(s.enemies[0].y, 12000);
  EXPECT_EQ(s.enemies[1].kind, EnemyKind::RedKoopa);
  EXPECT_EQ(s.scene.at(11, 9), Tile::Empty);
}

TEST(Step, StandingStillIsEquilibrium) {
  const SimState s0 = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  const SimState s1 = step(s0, ActionInput{}, kCfg);
  EXPECT_EQ(s1.avatar, s0.avatar);
  EXPECT_EQ(s1.tick, s0.tick + 1);
}

TEST(Step, GravityAccumulatesWhileFalling) {
  SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  s.avatar.y = 3000;
  s.avatar.onGround = false;
  for (int t = 0; t < 5; ++t) {
    const Milli before = s.avatar.vy;
    advance(s, ActionInput{}, kPhys);
    EXPECT_EQ(s.avatar.vy, before + kPhys.gravity);
  }
}

TEST(Step, TerminalStateIsUnchanged) {
  SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  s.status = Status::LoseDeath;
  EXPECT_EQ(step(s, input(true), kCfg), s);
}

TEST(Step, StompKillsGoombaAndBounces) {
  auto rows = flatRows(kSceneWidth);
  rows[11][6] = 'E';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  s.avatar.x = s.enemies[0].x;
  s.avatar.y = s.enemies[0].y - 2500;
  s.avatar.onGround = false;
  for (int t = 0; t < 30 && s.enemies[0].alive; ++t) advance(s, ActionInput{}, kPhys);
  EXPECT_FALSE(s.enemies[0].alive);
  EXPECT_EQ(s.status, Status::Running);
  EXPECT_EQ(s.avatar.vy, -kPhys.stompBounce);
}

TEST(Step, WalkingIntoGoombaKills) {
  auto rows = flatRows(kSceneWidth);
  rows[11][3] = 'E';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  for (int t = 0; t < 100 && s.status == Status::Running; ++t) {
    advance(s, input(true), kPhys);
  }
  EXPECT_EQ(s.status, Status::LoseDeath);
}

TEST(Step, CoinCollectedAndNotRendered) {
  auto rows = flatRows(kSceneWidth);
  rows[11][3] = 'o';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  EXPECT_NE(renderAscii(s).find('o'), std::string::npos);
  for (int t = 0; t < 40; ++t) advance(s, input(true), kPhys);
  EXPECT_EQ(s.scene.at(11, 3), Tile::Empty);
  EXPECT_EQ(renderAscii(s).find('o'), std::string::npos);
}

TEST(Step, HeadHitTurnsQuestionIntoBrick) {
  auto rows = flatRows(kSceneWidth);
  rows[9][1] = '?';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  s.avatar.x = 1500;
  for (int t = 0; t < 10; ++t) advance(s, input(false, true), kPhys);
  EXPECT_EQ(s.scene.at(9, 1), Tile::Brick);
}

TEST(Enemies, GoombaWalksOffLedgeAndDies) {
  auto rows = flatRows(kSceneWidth);
  testing::gap(rows, 1, 2);
  rows[11][4] = 'E';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  for (int t = 0; t < 200 && s.enemies[0].alive; ++t) advance(s, ActionInput{}, kPhys);
  EXPECT_FALSE(s.enemies[0].alive);
  EXPECT_EQ(s.status, Status::Running);
}

TEST(Enemies, RedKoopaPacesItsPlatform) {
  auto rows = flatRows(kSceneWidth);
  testing::gap(rows, 4, 1);
  testing::gap(rows, 10, 1);
  rows[11][7] = 'R';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  int reversals = 0;
  Milli lastVx = s.enemies[0].vx;
  for (int t = 0; t < kCfg.tickLimit - 1; ++t) {
    advance(s, ActionInput{}, kPhys);
    const EnemyState& e = s.enemies[0];
    ASSERT_TRUE(e.alive);
    ASSERT_GE(e.x, 5000);
    ASSERT_LE(e.x, 10000);
    if (e.vx != lastVx) ++reversals;
    lastVx = e.vx;
  }
  EXPECT_GE(reversals, 4);
}

TEST(Enemies, GoombaTurnsAtWalls) {
  auto rows = flatRows(kSceneWidth);
  testing::wall(rows, 3, 2);
  testing::wall(rows, 9, 2);
  rows[11][6] = 'E';
  SimState s = initSim(sceneFromRows(rows), kCfg);
  bool sawRight = false;
  for (int t = 0; t < 300; ++t) {
    advance(s, ActionInput{}, kPhys);
    sawRight = sawRight || s.enemies[0].vx > 0;
    ASSERT_GT(s.enemies[0].x, 4000);
    ASSERT_LT(s.enemies[0].x, 9000);
  }
  EXPECT_TRUE(sawRight);
}

TEST(Progress, InitialWinAndStalled) {
  auto rows = flatRows(kSceneWidth);
  SimState s = initSim(sceneFromRows(rows), kCfg);
  EXPECT_NEAR(progress(s), 0.0, 0.05);

  SimState run = s;
  for (int t = 0; t < 200 && run.status == Status::Running; ++t) {
    advance(run, input(true, false, true), kPhys);
  }
  EXPECT_EQ(run.status, Status::Win);
  EXPECT_DOUBLE_EQ(progress(run), 1.0);

  testing::wall(rows, 4, 8);
  SimState blocked = initSim(sceneFromRows(rows), kCfg);
  for (int t = 0; t < 200; ++t) advance(blocked, input(true, false, true), kPhys);
  EXPECT_EQ(blocked.avatar.x, 3600);
  EXPECT_DOUBLE_EQ(progress(blocked), 0.2);
}

TEST(RenderAscii, SpawnMarkerAboveGround) {
  const SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  const std::string text = renderAscii(s);
  std::vector<std::string> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  ASSERT_EQ(lines.size(), static_cast<std::size_t>(kRows));
  EXPECT_EQ(lines[11][0], 'M');
  EXPECT_EQ(lines[11].size(), static_cast<std::size_t>(kSceneWidth));
}

TEST(RenderAscii, NoMarkerAfterWin) {
  SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  while (s.status == Status::Running) advance(s, input(true, false, true), kPhys);
  EXPECT_EQ(renderAscii(s).find('M'), std::string::npos);
}

TEST(RenderAscii, EnemyAtSpawnCell) {
  auto rows = flatRows(kSceneWidth);
  rows[11][9] = 'E';
  const std::string text = renderAscii(initSim(sceneFromRows(rows), kCfg));
  EXPECT_EQ(text[11 * (kSceneWidth + 1) + 9], 'E');
}

TEST(Properties, SolidityMatchesTileKind) {
  const std::string solid = "XS?<>[]";
  for (char c : std::string("-XS?o<>[]ER")) {
    auto rows = flatRows(kSceneWidth);
    rows[5][5] = c;
    const Scene scene = sceneFromRows(rows);
    EXPECT_EQ(scene.solidAt(5, 5), solid.find(c) != std::string::npos) << c;
  }
  const Scene scene = sceneFromRows(flatRows(kSceneWidth));
  EXPECT_TRUE(scene.solidAt(5, -1));
  EXPECT_FALSE(scene.solidAt(12, kSceneWidth));
  EXPECT_FALSE(scene.solidAt(kRows, 3));
  EXPECT_FALSE(scene.solidAt(-1, 3));
}

TEST(Properties, SameInputsSameTrajectory) {
  auto rows = flatRows(kSceneWidth);
  rows[11][8] = 'E';
  rows[11][13] = 'R';
  rows[8][5] = '?';
  testing::wall(rows, 11, 2);
  const Scene scene = sceneFromRows(rows);
  Rng rng(5);
  std::vector<ActionInput> inputs;
  for (int i = 0; i < 300; ++i) inputs.push_back(ActionInput::fromBits(rng.below(16)));
  SimState a = initSim(scene, kCfg), b = initSim(scene, kCfg);
  for (const ActionInput& in : inputs) {
    advance(a, in, kPhys);
    advance(b, in, kPhys);
    ASSERT_EQ(a, b);
  }
}

TEST(Properties, ProgressStaysInRange) {
  const Scene scene = sceneFromRows(flatRows(kSceneWidth));
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    SimState s = initSim(scene, kCfg);
    for (int t = 0; t < 200; ++t) {
      advance(s, ActionInput::fromBits(rng.below(16)), kPhys);
      const double p = progress(s);
      ASSERT_GE(p, 0.0);
      ASSERT_LE(p, 1.0);
    }
  }
}

TEST(PhysicsConfig, RejectsNonsense) {
  PhysicsConfig cfg;
  cfg.gravity = -0.1;
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  cfg = PhysicsConfig{};
  cfg.jumpImpulse = 0.5;
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  EXPECT_NO_THROW(PhysicsConfig{}.validate());
}

TEST(Trace, LineFormat) {
  SimState s = initSim(sceneFromRows(flatRows(kSceneWidth)), kCfg);
  advance(s, input(true), kPhys);
  EXPECT_EQ(traceLine(s, input(true)), "1,0.530,12.000,0.030,0.000,2,Running");
}

}  // namespace
}  // namespace scenegen
