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

#include "slowspace/scene/space.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "json.hpp"

namespace slowspace {

std::string_view EditErrorName(EditError e) {
  switch (e) {
    case EditError::kInvalidGrid:
      return "InvalidGrid";
    case EditError::kOutOfBounds:
      return "OutOfBounds";
    case EditError::kCellFull:
      return "CellFull";
    case EditError::kNoSuchItem:
      return "NoSuchItem";
  }
  return "Unknown";
}

std::int64_t QuantizeWear(double wear) {
  return static_cast<std::int64_t>(std::llround(wear * 10000.0));
}

double RoundWear(double wear) {
  return static_cast<double>(QuantizeWear(wear)) / 10000.0;
}

std::string FormatWear(double wear) {
  const std::int64_t q = QuantizeWear(wear);
  const std::uint64_t mag = q < 0 ? 0 - static_cast<std::uint64_t>(q)
                                  : static_cast<std::uint64_t>(q);
  std::string frac = std::to_string(mag % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return (q < 0 ? "-" : "") + std::to_string(mag / 10000) + "." + frac;
}

const PlacedItem* Space::FindItem(ItemId id) const {
  auto it = std::lower_bound(
      items.begin(), items.end(), id,
      [](const PlacedItem& item, ItemId v) { return item.id < v; });
  if (it == items.end() || it->id != id) return nullptr;
  return &*it;
}

int Space::ItemsAt(Cell c) const {
  return static_cast<int>(std::count_if(
      items.begin(), items.end(),
      [c](const PlacedItem& item) { return item.cell == c; }));
}

bool operator==(const Space& a, const Space& b) {
  if (a.space_id != b.space_id || a.name != b.name || a.seed != b.seed ||
      a.grid != b.grid || a.terrain != b.terrain || a.walls != b.walls ||
      a.items != b.items || a.time_of_day != b.time_of_day ||
      a.next_item_id != b.next_item_id || a.op_seq != b.op_seq ||
      a.residue.size() != b.residue.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.residue.size(); ++i) {
    if (QuantizeWear(a.residue[i]) != QuantizeWear(b.residue[i])) return false;
  }
  return true;
}

EditResult<Space> NewSpace(std::string space_id, std::string name,
                           std::uint64_t seed, const GridSpec& grid) {
  if (!grid.IsValid()) return MakeUnexpected(EditError::kInvalidGrid);
  Space s;
  s.space_id = std::move(space_id);
  s.name = std::move(name);
  s.seed = seed;
  s.grid = grid;
  s.terrain.assign(grid.CellCount(), Terrain::kGrass);
  s.residue.assign(grid.CellCount(), 0.0);
  return s;
}

EditResult<void> SetTerrain(Space& space, Cell cell, Terrain terrain) {
  if (!InBounds(space.grid, cell)) return MakeUnexpected(EditError::kOutOfBounds);
  space.terrain[CellIndex(space.grid, cell)] = terrain;
  return {};
}

EditResult<void> SetWall(Space& space, const WallEdge& edge, bool present) {
  if (!InBounds(space.grid, edge)) return MakeUnexpected(EditError::kOutOfBounds);
  if (present) {
    space.walls.insert(edge);
  } else {
    space.walls.erase(edge);
  }
  return {};
}

EditResult<ItemId> PlaceItem(Space& space, ItemKind kind, Cell cell) {
  if (!InBounds(space.grid, cell)) return MakeUnexpected(EditError::kOutOfBounds);
  if (space.ItemsAt(cell) >= kMaxItemsPerCell) {
    return MakeUnexpected(EditError::kCellFull);
  }
  ItemId id = space.next_item_id++;
  // Ids only grow, so appending keeps the list sorted.
  space.items.push_back(PlacedItem{id, kind, cell});
  return id;
}

namespace {

std::vector<PlacedItem>::iterator FindItemIt(Space& space, ItemId id) {
  auto it = std::lower_bound(
      space.items.begin(), space.items.end(), id,
      [](const PlacedItem& item, ItemId v) { return item.id < v; });
  if (it != space.items.end() && it->id != id) return space.items.end();
  return it;
}

}  // namespace

EditResult<void> MoveItem(Space& space, ItemId id, Cell to) {
  auto it = FindItemIt(space, id);
  if (it == space.items.end()) return MakeUnexpected(EditError::kNoSuchItem);
  if (!InBounds(space.grid, to)) return MakeUnexpected(EditError::kOutOfBounds);
  if (it->cell == to) return {};
  if (space.ItemsAt(to) >= kMaxItemsPerCell) {
    return MakeUnexpected(EditError::kCellFull);
  }
  it->cell = to;
  return {};
}

EditResult<void> RemoveItem(Space& space, ItemId id) {
  auto it = FindItemIt(space, id);
  if (it == space.items.end()) return MakeUnexpected(EditError::kNoSuchItem);
  space.items.erase(it);
  return {};
}

void SetTimeOfDay(Space& space, TimeOfDay t) { space.time_of_day = t; }

namespace {

bool IsValidUtf8(const std::string& s) {
  try {
    (void)nlohmann::json(s).dump();
    return true;
  } catch (const nlohmann::json::type_error&) {
    return false;
  }
}

}  // namespace

std::vector<std::string> ValidateSpace(const Space& space) {
  std::vector<std::string> out;
  if (!IsValidUtf8(space.space_id)) out.push_back("space_id is not valid UTF-8");
  if (!IsValidUtf8(space.name)) out.push_back("name is not valid UTF-8");
  const GridSpec& g = space.grid;
  if (!g.IsValid()) {
    out.push_back("grid out of range");
    // Array length checks below are meaningless without a sane grid.
    return out;
  }
  if (space.terrain.size() != g.CellCount()) {
    out.push_back("terrain length mismatch");
  }
  if (space.residue.size() != g.CellCount()) {
    out.push_back("residue length mismatch");
  }
  for (double w : space.residue) {
    if (!(w >= 0.0 && w <= 1.0)) {
      out.push_back("residue out of range");
      break;
    }
  }
  for (const WallEdge& e : space.walls) {
    if (!InBounds(g, e)) {
      out.push_back("wall out of bounds");
      break;
    }
  }
  if (space.next_item_id < 1) out.push_back("next_item_id must be positive");
  bool ascending = true;
  for (std::size_t i = 0; i < space.items.size(); ++i) {
    const PlacedItem& item = space.items[i];
    if (item.id == 0) out.push_back("item id must be positive");
    if (i > 0 && space.items[i - 1].id >= item.id) ascending = false;
    if (item.id >= space.next_item_id) {
      out.push_back("item id " + std::to_string(item.id) +
                    " not below next_item_id");
    }
    if (!InBounds(g, item.cell)) {
      out.push_back("item out of bounds");
    }
  }
  if (!ascending) out.push_back("items not in ascending unique id order");
  std::vector<Cell> cells;
  cells.reserve(space.items.size());
  for (const PlacedItem& item : space.items) cells.push_back(item.cell);
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 0; i + kMaxItemsPerCell < cells.size(); ++i) {
    if (cells[i] == cells[i + kMaxItemsPerCell]) {
      out.push_back("more than 8 items in one cell");
      break;
    }
  }
  return out;
}

}  // namespace slowspace
