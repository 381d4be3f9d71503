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

#include "scenegen/config.hpp"

namespace scenegen {
namespace {

TEST(ParseConfig, EmptyTextGivesDefaults) {
  const ConfigFile f = parseConfig("# nothing here\n\n");
  EXPECT_EQ(f.config.populationSize, 100);
  EXPECT_EQ(f.config.generations, 120);
  EXPECT_EQ(f.config.limitedAgent.name, "LJ");
  EXPECT_TRUE(f.metadata.empty());
}

TEST(ParseConfig, ReadsEveryGroup) {
  const ConfigFile f = parseConfig(
      "populationSize = 20\n"
      "generations=30   # short run\n"
      "limitedAgent = NR\n"
      "gravity = 0.2\n"
      "wallJumpEnabled = false\n"
      "nodeBudget = 3000\n"
      "seed = 18446744073709551615\n");
  EXPECT_EQ(f.config.populationSize, 20);
  EXPECT_EQ(f.config.generations, 30);
  EXPECT_EQ(f.config.limitedAgent.name, "NR");
  EXPECT_DOUBLE_EQ(f.config.physics.gravity, 0.2);
  EXPECT_FALSE(f.config.physics.wallJumpEnabled);
  EXPECT_EQ(f.config.search.nodeBudget, 3000);
  EXPECT_EQ(f.config.seed, 18446744073709551615ULL);
}

TEST(ParseConfig, Errors) {
  EXPECT_THROW(parseConfig("populationSise = 20\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("populationSize = twenty\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("populationSize = 20.5\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("populationSize 20\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("seed = 1\nseed = 2\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("limitedAgent = Q\n"), InvalidConfigError);
  EXPECT_THROW(parseConfig("crossoverRate = 1.2\n"), InvalidConfigError);
  try {
    parseConfig("\n\nbogus = 1\n");
    FAIL();
  } catch (const InvalidConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(FormatConfig, RoundTrips) {
  EvolutionConfig cfg;
  cfg.seed = 42;
  cfg.mutationRate = 0.1;
  cfg.physics.jumpImpulse = -0.66;
  cfg.search.xyGrain = 1.0 / 3;
  cfg.limitedAgent = AgentCapabilities::enemyBlind();
  const std::string text = formatConfig(cfg);
  const EvolutionConfig back = parseConfig(text).config;
  EXPECT_EQ(formatConfig(back), text);
  EXPECT_EQ(back.search.xyGrain, 1.0 / 3);
  EXPECT_EQ(back.limitedAgent.name, "EB");
}

TEST(RunManifest, ReadsBackAsConfig) {
  RunManifest m;
  m.config.seed = 9;
  m.corpusChecksum = "0123456789abcdef";
  m.toolVersion = std::string(toolVersion());
  m.startedAt = "2026-01-01T00:00:00Z";
  m.finishedAt = "2026-01-01T00:01:00Z";
  const ConfigFile f = parseConfig(m.format());
  EXPECT_EQ(f.config.seed, 9u);
  EXPECT_EQ(f.metadata.at("corpusChecksum"), "0123456789abcdef");
  EXPECT_EQ(formatConfig(f.config), formatConfig(m.config));
}

}  // namespace
}  // namespace scenegen
