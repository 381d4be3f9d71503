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

#ifndef SCENEGEN_CONFIG_HPP_
#define SCENEGEN_CONFIG_HPP_

#include <map>
#include <string>
#include <string_view>

#include "scenegen/evolution.hpp"

namespace scenegen {

// Flat "key = value" text, one pair per line, '#' starts a comment. Keys are
// the field names of EvolutionConfig, PhysicsConfig and SearchConfig;
// limitedAgent takes an agent name (B, LJ, EB, NR). Keys not given keep their
// defaults.
struct ConfigFile {
  EvolutionConfig config;
  // Run metadata keys (corpusChecksum, toolVersion, startedAt, finishedAt).
  // Only present when a manifest is read back as a config.
  std::map<std::string, std::string> metadata;
};

// Throws InvalidConfigError on unknown keys, malformed values, duplicate
// keys, or a config that fails validate().
ConfigFile parseConfig(std::string_view text);
ConfigFile loadConfigFile(const std::string& path);

// Every key, in a fixed order, with doubles printed so they parse back to the
// same value.
std::string formatConfig(const EvolutionConfig& cfg);

struct RunManifest {
  EvolutionConfig config;
  std::string corpusChecksum;
  std::string toolVersion;
  std::string startedAt;
  std::string finishedAt;

  std::string format() const;
};

std::string_view toolVersion();

}  // namespace scenegen

#endif  // SCENEGEN_CONFIG_HPP_
