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

#ifndef SCENEGEN_TILE_HPP_
#define SCENEGEN_TILE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scenegen {

// Every level and scene in this project is exactly this tall.
inline constexpr int kRows = 14;

enum class Tile : std::uint8_t {
  Empty,
  Ground,
  Brick,
  Question,
  Coin,
  PipeTopLeft,
  PipeTopRight,
  PipeBodyLeft,
  PipeBodyRight,
  EnemyGoomba,
  EnemyRedKoopa,
};

inline constexpr int kTileKindCount = 11;

char tileChar(Tile tile);
std::optional<Tile> tileFromChar(char c);

// Ground, Brick, Question and all four pipe parts block movement.
constexpr bool isSolid(Tile t) {
  switch (t) {
    case Tile::Ground:
    case Tile::Brick:
    case Tile::Question:
    case Tile::PipeTopLeft:
    case Tile::PipeTopRight:
    case Tile::PipeBodyLeft:
    case Tile::PipeBodyRight:
      return true;
    default:
      return false;
  }
}

constexpr bool isPipe(Tile t) {
  return t == Tile::PipeTopLeft || t == Tile::PipeTopRight ||
         t == Tile::PipeBodyLeft || t == Tile::PipeBodyRight;
}

constexpr bool isEnemyMarker(Tile t) {
  return t == Tile::EnemyGoomba || t == Tile::EnemyRedKoopa;
}

// A 14-row grid of arbitrary width; the parsed form of a level file.
class TileGrid {
 public:
  TileGrid() = default;
  explicit TileGrid(int width, Tile fill = Tile::Empty)
      : width_(width), tiles_(static_cast<std::size_t>(width) * kRows, fill) {}

  int width() const { return width_; }
  int rows() const { return kRows; }

  Tile at(int row, int col) const {
    return tiles_[static_cast<std::size_t>(row) * width_ + col];
  }
  void set(int row, int col, Tile t) {
    tiles_[static_cast<std::size_t>(row) * width_ + col] = t;
  }

  friend bool operator==(const TileGrid&, const TileGrid&) = default;

 private:
  int width_ = 0;
  std::vector<Tile> tiles_;
};

class LevelParseError : public std::runtime_error {
 public:
  enum class Kind { UnknownCharacter, WrongRowCount, RaggedLines };

  static LevelParseError unknownCharacter(int row, int col, char c);
  static LevelParseError wrongRowCount(int count);
  static LevelParseError raggedLines(int row);

  Kind kind() const { return kind_; }
  int row() const { return row_; }
  int col() const { return col_; }
  char character() const { return char_; }
  int rowCount() const { return row_count_; }

 private:
  LevelParseError(Kind kind, std::string what)
      : std::runtime_error(std::move(what)), kind_(kind) {}

  Kind kind_;
  int row_ = -1;
  int col_ = -1;
  char char_ = '\0';
  int row_count_ = 0;
};

// Parses 14 newline-separated rows of equal width. A trailing newline after
// the last row is optional.
TileGrid parseLevel(std::string_view text);

// Inverse of parseLevel: 14 rows, each terminated by '\n'.
std::string renderLevel(const TileGrid& grid);

// Reads and parses a file. Parse errors are rethrown with the path prepended.
TileGrid loadLevelFile(const std::filesystem::path& path);

}  // namespace scenegen

#endif  // SCENEGEN_TILE_HPP_
