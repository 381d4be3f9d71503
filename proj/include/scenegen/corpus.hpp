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

#ifndef SCENEGEN_CORPUS_HPP_
#define SCENEGEN_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scenegen/rng.hpp"
#include "scenegen/tile.hpp"

namespace scenegen {

// One width-1 column of a level. cells[0] is the top row.
struct Slice {
  std::array<Tile, kRows> cells{};
  std::int64_t multiplicity = 1;

  // The 14 tile characters, top to bottom.
  std::string column() const;
};

class EmptyPoolError : public std::runtime_error {
 public:
  EmptyPoolError() : std::runtime_error("slice pool is empty") {}
};

// Unique slices with their corpus counts. Immutable once built.
class SlicePool {
 public:
  SlicePool() = default;

  // Merges slices with identical cells, summing multiplicities. Order is
  // first occurrence. Throws EmptyPoolError on empty input and
  // std::invalid_argument on a non-positive multiplicity.
  static SlicePool fromSlices(std::span<const Slice> slices);

  std::size_t size() const { return slices_.size(); }
  bool empty() const { return slices_.empty(); }
  std::int64_t totalWeight() const { return total_weight_; }
  const Slice& operator[](std::size_t i) const { return slices_[i]; }
  const std::vector<Slice>& slices() const { return slices_; }

  // Index i with probability multiplicity(i) / totalWeight. Consumes exactly
  // one bounded draw from rng.
  std::size_t sampleIndex(Rng& rng) const;

 private:
  std::vector<Slice> slices_;
  std::vector<std::int64_t> cumulative_;
  std::int64_t total_weight_ = 0;
};

// Row 0 at least half solid. Stands in for "underground level".
bool hasCeiling(const TileGrid& level);

SlicePool extractSlices(std::span<const TileGrid> levels, bool excludeCeiling);

const Slice& sampleSlice(const SlicePool& pool, Rng& rng);

// Pool dump: "<14 chars>\t<multiplicity>\n" per slice.
std::string dumpPool(const SlicePool& pool);
SlicePool parsePoolDump(std::string_view text);
SlicePool loadPoolFile(const std::filesystem::path& path);

// Every *.txt file in the directory, parsed, in filename order.
struct CorpusFile {
  std::filesystem::path path;
  TileGrid grid;
};
std::vector<CorpusFile> loadCorpusDir(const std::filesystem::path& dir);

// 64-bit FNV-1a, printed as 16 hex digits. Used for manifest checksums.
std::string fnv1aHex(std::string_view bytes);

}  // namespace scenegen

#endif  // SCENEGEN_CORPUS_HPP_
