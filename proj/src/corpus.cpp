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

#include "scenegen/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace scenegen {

std::string Slice::column() const {
  std::string s(kRows, '-');
  for (int r = 0; r < kRows; ++r) s[r] = tileChar(cells[r]);
  return s;
}

SlicePool SlicePool::fromSlices(std::span<const Slice> slices) {
  if (slices.empty()) throw EmptyPoolError();
  SlicePool pool;
  std::map<std::array<Tile, kRows>, std::size_t> index;
  for (const Slice& s : slices) {
    if (s.multiplicity < 1) {
      throw std::invalid_argument("slice multiplicity must be positive");
    }
    auto [it, inserted] = index.try_emplace(s.cells, pool.slices_.size());
    if (inserted) {
      pool.slices_.push_back(s);
    } else {
      pool.slices_[it->second].multiplicity += s.multiplicity;
    }
  }
  pool.cumulative_.reserve(pool.slices_.size());
  for (const Slice& s : pool.slices_) {
    pool.total_weight_ += s.multiplicity;
    pool.cumulative_.push_back(pool.total_weight_);
  }
  return pool;
}

std::size_t SlicePool::sampleIndex(Rng& rng) const {
  if (empty()) throw EmptyPoolError();
  const auto draw =
      static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total_weight_)));
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), draw);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

bool hasCeiling(const TileGrid& level) {
  int solid = 0;
  for (int c = 0; c < level.width(); ++c) {
    if (isSolid(level.at(0, c))) ++solid;
  }
  return 2 * solid >= level.width();
}

SlicePool extractSlices(std::span<const TileGrid> levels, bool excludeCeiling) {
  std::vector<Slice> slices;
  for (const TileGrid& level : levels) {
    if (excludeCeiling && hasCeiling(level)) continue;
    for (int c = 0; c < level.width(); ++c) {
      Slice s;
      for (int r = 0; r < kRows; ++r) s.cells[r] = level.at(r, c);
      slices.push_back(s);
    }
  }
  return SlicePool::fromSlices(slices);
}

const Slice& sampleSlice(const SlicePool& pool, Rng& rng) {
  return pool[pool.sampleIndex(rng)];
}

std::string dumpPool(const SlicePool& pool) {
  std::string out;
  for (const Slice& s : pool.slices()) {
    out += s.column();
    out += '\t';
    out += std::to_string(s.multiplicity);
    out += '\n';
  }
  return out;
}

SlicePool parsePoolDump(std::string_view text) {
  std::vector<Slice> slices;
  int lineNo = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      return std::runtime_error("pool line " + std::to_string(lineNo) + ": " +
                                why);
    };
    const std::size_t tab = line.find('\t');
    if (tab != static_cast<std::size_t>(kRows)) {
      throw fail("expected 14 tile characters followed by a tab");
    }
    Slice s;
    for (int r = 0; r < kRows; ++r) {
      auto t = tileFromChar(line[r]);
      if (!t) throw fail(std::string("unknown tile character '") + line[r] + "'");
      s.cells[r] = *t;
    }
    std::string_view count = line.substr(tab + 1);
    auto [ptr, ec] =
        std::from_chars(count.data(), count.data() + count.size(), s.multiplicity);
    if (ec != std::errc() || ptr != count.data() + count.size() ||
        s.multiplicity < 1) {
      throw fail("multiplicity must be a positive integer");
    }
    slices.push_back(s);
  }
  return SlicePool::fromSlices(slices);
}

SlicePool loadPoolFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parsePoolDump(buf.str());
}

std::vector<CorpusFile> loadCorpusDir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusFile> files;
  files.reserve(paths.size());
  for (const auto& p : paths) files.push_back({p, loadLevelFile(p)});
  return files;
}

std::string fnv1aHex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace scenegen
