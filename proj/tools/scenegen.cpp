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

// scenegen command-line front end.
//
// Exit codes: 0 success (or Win for replay), 1 replay did not win,
// 2 input error, 3 empty slice pool.
#include <CLI11.hpp>

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scenegen/agents.hpp"
#include "scenegen/config.hpp"
#include "scenegen/corpus.hpp"
#include "scenegen/evolution.hpp"
#include "scenegen/simulator.hpp"
#include "scenegen/tile.hpp"

namespace fs = std::filesystem;
using namespace scenegen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoWin = 1;
constexpr int kExitInput = 2;
constexpr int kExitEmptyPool = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string utcNow() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

EvolutionConfig configOrDefault(const std::string& path) {
  return path.empty() ? EvolutionConfig{} : loadConfigFile(path).config;
}

// Scenes given to replay and render must be full 18-column scenes.
Scene loadScene(const fs::path& path) {
  const TileGrid grid = loadLevelFile(path);
  if (grid.width() != kSceneWidth) {
    throw InputError(path.string() + ": scene width must be " +
                     std::to_string(kSceneWidth) + ", got " +
                     std::to_string(grid.width()));
  }
  return Scene(grid);
}

// ---- extract ---------------------------------------------------------------

struct ExtractArgs {
  std::string corpusDir;
  std::string out;
  bool excludeCeiling = false;
};

int runExtract(const ExtractArgs& args) {
  if (!fs::is_directory(args.corpusDir)) {
    throw InputError(args.corpusDir + " is not a directory");
  }
  const std::vector<CorpusFile> files = loadCorpusDir(args.corpusDir);
  if (files.empty()) throw InputError(args.corpusDir + " contains no *.txt levels");
  std::vector<TileGrid> levels;
  for (const CorpusFile& f : files) levels.push_back(f.grid);
  SlicePool pool;
  try {
    pool = extractSlices(levels, args.excludeCeiling);
  } catch (const EmptyPoolError&) {
    std::cerr << "error: no slices left after excluding ceilinged levels\n";
    return kExitEmptyPool;
  }
  writeFile(args.out, dumpPool(pool));
  std::cout << "levels " << files.size() << " unique " << pool.size()
            << " totalWeight " << pool.totalWeight() << '\n';
  return kExitOk;
}

// ---- evolve ----------------------------------------------------------------

struct EvolveArgs {
  std::string pool;
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  bool quiet = false;
};

void writeTrace(const fs::path& path, const Scene& scene, const EvolutionConfig& cfg,
                const AgentCapabilities& caps) {
  const PlayResult result = playScene(scene, caps, cfg.physics, cfg.search);
  writeFile(path, traceCsv(scene, cfg.physics, caps, result));
}

int runEvolve(const EvolveArgs& args) {
  const std::string poolBytes = readFile(args.pool);
  SlicePool pool;
  try {
    pool = parsePoolDump(poolBytes);
  } catch (const EmptyPoolError&) {
    std::cerr << "error: " << args.pool << ": slice pool is empty\n";
    return kExitEmptyPool;
  } catch (const std::exception& e) {
    throw InputError(args.pool + ": " + e.what());
  }
  const std::string checksum = fnv1aHex(poolBytes);

  ConfigFile file;
  if (!args.config.empty()) file = loadConfigFile(args.config);
  EvolutionConfig cfg = file.config;
  if (args.seed) cfg.seed = *args.seed;
  if (auto it = file.metadata.find("corpusChecksum");
      it != file.metadata.end() && it->second != checksum) {
    throw InputError("pool checksum " + checksum + " does not match manifest " +
                     it->second);
  }

  const fs::path outDir = args.out;
  if (fs::exists(outDir) &&
      (!fs::is_directory(outDir) || !fs::is_empty(outDir))) {
    throw InputError(outDir.string() + " already exists and is not an empty directory");
  }
  fs::create_directories(outDir);

  RunManifest manifest{cfg, checksum, std::string(toolVersion()), utcNow(), {}};
  ProgressSink sink;
  if (!args.quiet) {
    sink = [](const GenerationRecord& g) {
      std::fprintf(stderr, "gen %3d  max %.6f  mean %.6f  feasible %d\n", g.generation,
                   g.maxFeasibleFitness, g.meanFeasibleFitness, g.feasibleCount);
    };
  }
  const EvolutionResult result = evolve(pool, cfg, sink, args.workers);
  manifest.finishedAt = utcNow();

  const Scene best = assembleScene(pool, result.best.genes);
  writeFile(outDir / "manifest.txt", manifest.format());
  writeFile(outDir / "stats.csv", result.stats.toCsv());
  writeFile(outDir / "best_scene.txt", renderLevel(best.toGrid()));
  try {
    writeTrace(outDir / "trace_perfect.csv", best, cfg, AgentCapabilities::perfect());
    writeTrace(outDir / "trace_limited.csv", best, cfg, cfg.limitedAgent);
  } catch (const NoSpawnSurfaceError&) {
    std::cerr << "warning: best scene has no spawn surface; traces not written\n";
  }

  if (result.best.feasible()) {
    std::printf("best feasible fitness %.6f\n", *result.best.feasibleFitness);
  } else {
    std::printf("no feasible scene; best infeasible fitness %.6f\n",
                *result.best.infeasibleFitness);
  }
  return kExitOk;
}

// ---- replay ----------------------------------------------------------------

struct ReplayArgs {
  std::string scene;
  std::string agent = "B";
  std::string config;
  std::string out;
};

int runReplay(const ReplayArgs& args) {
  const Scene scene = loadScene(args.scene);
  const AgentCapabilities caps = AgentCapabilities::byName(args.agent);
  const EvolutionConfig cfg = configOrDefault(args.config);

  PlayResult result;
  try {
    result = playScene(scene, caps, cfg.physics, cfg.search);
  } catch (const NoSpawnSurfaceError& e) {
    throw InputError(args.scene + ": " + e.what());
  }
  const std::string out =
      args.out.empty() ? args.scene + "." + caps.name + ".trace.csv" : args.out;
  writeFile(out, traceCsv(scene, cfg.physics, caps, result));
  std::printf("agent %s status %s progress %.6f ticks %d\n", caps.name.c_str(),
              std::string(statusName(result.status)).c_str(), result.progress,
              result.ticks);
  return result.status == Status::Win ? kExitOk : kExitNoWin;
}

// ---- render ----------------------------------------------------------------

int runRender(const std::string& scenePath) {
  const Scene scene = loadScene(scenePath);
  try {
    std::cout << renderAscii(initSim(scene, PhysicsConfig{}));
  } catch (const NoSpawnSurfaceError&) {
    std::cout << renderLevel(scene.toGrid());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolve platformer scenes that separate a perfect agent from a limited one"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(toolVersion()));

  ExtractArgs extract;
  auto* extractCmd = app.add_subcommand("extract", "Build a slice pool from a level corpus");
  extractCmd->add_option("corpus", extract.corpusDir, "Directory of level .txt files")
      ->required();
  extractCmd->add_option("--out", extract.out, "Pool file to write")->required();
  extractCmd->add_flag("--exclude-ceiling", extract.excludeCeiling,
                       "Skip levels whose top row is mostly solid");

  EvolveArgs evolveArgs;
  auto* evolveCmd = app.add_subcommand("evolve", "Run the two-population GA");
  evolveCmd->add_option("pool", evolveArgs.pool, "Pool file from extract")->required();
  evolveCmd->add_option("--config", evolveArgs.config, "Config or manifest file");
  evolveCmd->add_option("--out", evolveArgs.out, "New output directory")->required();
  evolveCmd->add_option("--seed", evolveArgs.seed, "Overrides the config seed");
  evolveCmd->add_option("--workers", evolveArgs.workers,
                        "Evaluation threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  evolveCmd->add_flag("--quiet", evolveArgs.quiet, "No per-generation progress");

  ReplayArgs replay;
  auto* replayCmd = app.add_subcommand("replay", "Play a scene with one agent");
  replayCmd->add_option("scene", replay.scene, "Scene file")->required();
  replayCmd->add_option("--agent", replay.agent, "B, LJ, EB or NR")
      ->check(CLI::IsMember({"B", "LJ", "EB", "NR"}));
  replayCmd->add_option("--config", replay.config, "Config or manifest file");
  replayCmd->add_option("--out", replay.out, "Trace CSV path");

  std::string renderPath;
  auto* renderCmd = app.add_subcommand("render", "Print a scene with the spawn marker");
  renderCmd->add_option("scene", renderPath, "Scene file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*extractCmd) return runExtract(extract);
    if (*evolveCmd) return runEvolve(evolveArgs);
    if (*replayCmd) return runReplay(replay);
    if (*renderCmd) return runRender(renderPath);
  } catch (const EmptyPoolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmptyPool;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
