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

#include "scenegen/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

namespace scenegen {

namespace {

using FieldRef = std::variant<int*, double*, bool*, std::uint64_t*>;

std::vector<std::pair<std::string_view, FieldRef>> bindFields(EvolutionConfig& c) {
  PhysicsConfig& p = c.physics;
  SearchConfig& s = c.search;
  return {
      {"populationSize", &c.populationSize},
      {"generations", &c.generations},
      {"crossoverRate", &c.crossoverRate},
      {"mutationRate", &c.mutationRate},
      {"elitism", &c.elitism},
      {"seed", &c.seed},
      {"sceneWidth", &c.sceneWidth},
      {"gravity", &p.gravity},
      {"jumpImpulse", &p.jumpImpulse},
      {"jumpHoldGravity", &p.jumpHoldGravity},
      {"maxJumpHoldTicks", &p.maxJumpHoldTicks},
      {"walkMaxSpeed", &p.walkMaxSpeed},
      {"runMaxSpeed", &p.runMaxSpeed},
      {"groundAccel", &p.groundAccel},
      {"airAccel", &p.airAccel},
      {"friction", &p.friction},
      {"enemySpeed", &p.enemySpeed},
      {"stompBounce", &p.stompBounce},
      {"tickLimit", &p.tickLimit},
      {"wallJumpEnabled", &p.wallJumpEnabled},
      {"wallJumpImpulseX", &p.wallJumpImpulseX},
      {"nodeBudget", &s.nodeBudget},
      {"replanInterval", &s.replanInterval},
      {"xyGrain", &s.xyGrain},
      {"vGrain", &s.vGrain},
      {"stallTicks", &s.stallTicks},
  };
}

constexpr std::string_view kAgentKey = "limitedAgent";
const std::set<std::string_view> kMetadataKeys = {"corpusChecksum", "toolVersion",
                                                  "startedAt", "finishedAt"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
bool parseNumber(std::string_view text, T& out) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return false;
  out = value;
  return true;
}

bool parseInto(std::string_view text, FieldRef ref) {
  return std::visit(
      [&](auto* field) -> bool {
        using T = std::remove_pointer_t<decltype(field)>;
        if constexpr (std::is_same_v<T, bool>) {
          if (text == "true" || text == "1") *field = true;
          else if (text == "false" || text == "0") *field = false;
          else return false;
          return true;
        } else {
          return parseNumber(text, *field);
        }
      },
      ref);
}

std::string formatField(FieldRef ref) {
  return std::visit(
      [](auto* field) -> std::string {
        using T = std::remove_pointer_t<decltype(field)>;
        if constexpr (std::is_same_v<T, bool>) {
          return *field ? "true" : "false";
        } else {
          char buf[64];
          auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *field);
          return std::string(buf, ptr);
        }
      },
      ref);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InvalidConfigError("config line " + std::to_string(line) + ": " + what);
}

}  // namespace

ConfigFile parseConfig(std::string_view text) {
  ConfigFile out;
  auto fields = bindFields(out.config);
  std::set<std::string, std::less<>> seen;

  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineNo;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(lineNo, "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(lineNo, "missing key");
    if (!seen.emplace(key).second) fail(lineNo, "duplicate key '" + std::string(key) + "'");

    if (key == kAgentKey) {
      try {
        out.config.limitedAgent = AgentCapabilities::byName(value);
      } catch (const std::invalid_argument&) {
        fail(lineNo, "unknown agent '" + std::string(value) + "'");
      }
      continue;
    }
    if (kMetadataKeys.contains(key)) {
      out.metadata.emplace(std::string(key), std::string(value));
      continue;
    }
    bool known = false;
    for (auto& [name, ref] : fields) {
      if (name != key) continue;
      known = true;
      if (!parseInto(value, ref)) {
        fail(lineNo, "bad value '" + std::string(value) + "' for " + std::string(key));
      }
      break;
    }
    if (!known) fail(lineNo, "unknown key '" + std::string(key) + "'");
  }
  out.config.validate();
  return out;
}

ConfigFile loadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parseConfig(buf.str());
  } catch (const InvalidConfigError& e) {
    throw InvalidConfigError(path + ": " + e.what());
  }
}

std::string formatConfig(const EvolutionConfig& cfg) {
  EvolutionConfig copy = cfg;
  std::string out;
  for (const auto& [name, ref] : bindFields(copy)) {
    out += name;
    out += " = ";
    out += formatField(ref);
    out += '\n';
    if (name == "seed") {
      out += kAgentKey;
      out += " = " + cfg.limitedAgent.name + '\n';
    }
  }
  return out;
}

std::string RunManifest::format() const {
  std::string out = "# scenegen run manifest\n";
  out += formatConfig(config);
  out += "corpusChecksum = " + corpusChecksum + '\n';
  out += "toolVersion = " + toolVersion + '\n';
  out += "startedAt = " + startedAt + '\n';
  out += "finishedAt = " + finishedAt + '\n';
  return out;
}

std::string_view toolVersion() { return "scenegen 0.1.0"; }

}  // namespace scenegen
