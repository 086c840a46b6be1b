// Copyright 2026 The Slow Space Authors
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

#ifndef SLOWSPACE_SCENE_TYPES_H_
#define SLOWSPACE_SCENE_TYPES_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace slowspace {

using ItemId = std::uint64_t;
using Seq = std::uint64_t;

inline constexpr int kMaxGridDim = 256;
inline constexpr double kMinCellSize = 0.5;
inline constexpr double kMaxCellSize = 10.0;
inline constexpr int kMaxItemsPerCell = 8;

struct GridSpec {
  int width = 16;
  int height = 16;
  double cell_size = 2.0;

  bool operator==(const GridSpec&) const = default;

  bool IsValid() const {
    return width >= 1 && width <= kMaxGridDim && height >= 1 &&
           height <= kMaxGridDim && cell_size >= kMinCellSize &&
           cell_size <= kMaxCellSize;
  }
  std::size_t CellCount() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  double ExtentX() const { return width * cell_size; }
  double ExtentZ() const { return height * cell_size; }
};

// Grid cell coordinates. x grows east, y grows south.
struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;

  auto operator<=>(const Cell&) const = default;
};

inline bool InBounds(const GridSpec& grid, Cell c) {
  return c.x >= 0 && c.y >= 0 && c.x < grid.width && c.y < grid.height;
}

// Row-major index; caller guarantees InBounds.
inline std::size_t CellIndex(const GridSpec& grid, Cell c) {
  return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(grid.width) +
         static_cast<std::size_t>(c.x);
}

enum class Terrain : std::uint8_t { kGrass, kRock, kWater };

// Editor click order: grass -> rock -> water -> grass.
constexpr Terrain NextTerrain(Terrain t) {
  switch (t) {
    case Terrain::kGrass:
      return Terrain::kRock;
    case Terrain::kRock:
      return Terrain::kWater;
    case Terrain::kWater:
      return Terrain::kGrass;
  }
  return Terrain::kGrass;
}

std::string_view TerrainCode(Terrain t);
std::optional<Terrain> TerrainFromCode(std::string_view code);

enum class TimeOfDay : std::uint8_t { kMorning, kDusk, kNight };

// Sun button order: morning -> dusk -> night -> morning.
constexpr TimeOfDay NextTimeOfDay(TimeOfDay t) {
  switch (t) {
    case TimeOfDay::kMorning:
      return TimeOfDay::kDusk;
    case TimeOfDay::kDusk:
      return TimeOfDay::kNight;
    case TimeOfDay::kNight:
      return TimeOfDay::kMorning;
  }
  return TimeOfDay::kMorning;
}

std::string_view TimeOfDayName(TimeOfDay t);
std::optional<TimeOfDay> TimeOfDayFromName(std::string_view name);

enum class ItemKind : std::uint8_t {
  kTree,
  kBoulder,
  kBench,
  kFlowerPatch,
  kStatue,
  kWell,
};

inline constexpr std::array<ItemKind, 6> kAllItemKinds = {
    ItemKind::kTree,   ItemKind::kBoulder, ItemKind::kBench,
    ItemKind::kFlowerPatch, ItemKind::kStatue, ItemKind::kWell,
};

std::string_view ItemKindName(ItemKind k);
std::optional<ItemKind> ItemKindFromName(std::string_view name);

enum class Orientation : std::uint8_t { kH, kV };

// A wall segment on a grid line. H runs along the north side of cell (x, y),
// V along the west side. Ordering is (orientation, x, y) with H before V.
struct WallEdge {
  Orientation orientation = Orientation::kH;
  std::int32_t x = 0;
  std::int32_t y = 0;

  auto operator<=>(const WallEdge&) const = default;
};

inline bool InBounds(const GridSpec& grid, const WallEdge& e) {
  if (e.x < 0 || e.y < 0) return false;
  if (e.orientation == Orientation::kH) {
    return e.x < grid.width && e.y <= grid.height;
  }
  return e.x <= grid.width && e.y < grid.height;
}

struct PlacedItem {
  ItemId id = 0;
  ItemKind kind = ItemKind::kTree;
  Cell cell;

  bool operator==(const PlacedItem&) const = default;
};

// Ground plane is y = 0; x east, z south, origin at the grid's north-west
// corner.
struct WorldPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const WorldPoint&) const = default;
};

}  // namespace slowspace

#endif  // SLOWSPACE_SCENE_TYPES_H_
