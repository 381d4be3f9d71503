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

#include "scenegen/tile.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace scenegen {

namespace {

constexpr std::array<char, kTileKindCount> kTileChars = {
    '-', 'X', 'S', '?', 'o', '<', '>', '[', ']', 'E', 'R'};

}  // namespace

char tileChar(Tile tile) { return kTileChars[static_cast<std::size_t>(tile)]; }

std::optional<Tile> tileFromChar(char c) {
  for (std::size_t i = 0; i < kTileChars.size(); ++i) {
    if (kTileChars[i] == c) return static_cast<Tile>(i);
  }
  return std::nullopt;
}

LevelParseError LevelParseError::unknownCharacter(int row, int col, char c) {
  std::ostringstream msg;
  msg << "unknown tile character '" << c << "' at row " << row << ", col "
      << col;
  LevelParseError e(Kind::UnknownCharacter, msg.str());
  e.row_ = row;
  e.col_ = col;
  e.char_ = c;
  return e;
}

LevelParseError LevelParseError::wrongRowCount(int count) {
  LevelParseError e(Kind::WrongRowCount,
                    "expected " + std::to_string(kRows) + " rows, got " +
                        std::to_string(count));
  e.row_count_ = count;
  return e;
}

LevelParseError LevelParseError::raggedLines(int row) {
  LevelParseError e(Kind::RaggedLines,
                    "row " + std::to_string(row) +
                        " has a different length than row 0");
  e.row_ = row;
  return e;
}

TileGrid parseLevel(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (static_cast<int>(lines.size()) != kRows) {
    throw LevelParseError::wrongRowCount(static_cast<int>(lines.size()));
  }
  const std::size_t width = lines[0].size();
  for (int r = 0; r < kRows; ++r) {
    if (lines[r].size() != width || width == 0) {
      throw LevelParseError::raggedLines(r);
    }
  }
  TileGrid grid(static_cast<int>(width));
  for (int r = 0; r < kRows; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      auto tile = tileFromChar(lines[r][c]);
      if (!tile) {
        throw LevelParseError::unknownCharacter(r, static_cast<int>(c),
                                                lines[r][c]);
      }
      grid.set(r, static_cast<int>(c), *tile);
    }
  }
  return grid;
}

std::string renderLevel(const TileGrid& grid) {
  std::string out;
  out.reserve(static_cast<std::size_t>(grid.width() + 1) * kRows);
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < grid.width(); ++c) out.push_back(tileChar(grid.at(r, c)));
    out.push_back('\n');
  }
  return out;
}

TileGrid loadLevelFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parseLevel(buf.str());
  } catch (const LevelParseError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace scenegen
