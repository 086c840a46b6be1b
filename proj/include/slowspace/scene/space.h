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

#ifndef SLOWSPACE_SCENE_SPACE_H_
#define SLOWSPACE_SCENE_SPACE_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slowspace/scene/types.h"
#include "slowspace/util/expected.h"

namespace slowspace {

enum class EditError : std::uint8_t {
  kInvalidGrid,
  kOutOfBounds,
  kCellFull,
  kNoSuchItem,
};

// "OutOfBounds", "CellFull", ... These strings travel as rejection reasons.
std::string_view EditErrorName(EditError e);

template <typename T>
using EditResult = Expected<T, EditError>;

// The authoritative scene. Plain data so that decoded (possibly corrupt)
// files can be represented and then checked with ValidateSpace; the edit
// functions below are the only sanctioned mutators and each one is atomic:
// on error the space is left untouched.
struct Space {
  std::string space_id;
  std::string name;
  std::uint64_t seed = 0;
  GridSpec grid;
  std::vector<Terrain> terrain;   // row-major, grid.CellCount()
  std::set<WallEdge> walls;
  std::vector<PlacedItem> items;  // ascending id
  TimeOfDay time_of_day = TimeOfDay::kMorning;
  std::vector<double> residue;    // row-major wear in [0, 1]
  ItemId next_item_id = 1;
  Seq op_seq = 0;

  const PlacedItem* FindItem(ItemId id) const;
  int ItemsAt(Cell c) const;
  Terrain TerrainAt(Cell c) const { return terrain[CellIndex(grid, c)]; }
  double WearAt(Cell c) const { return residue[CellIndex(grid, c)]; }

  // Residue is compared at the canonical 4-decimal resolution so that
  // equality agrees with equality of canonical bytes.
  friend bool operator==(const Space& a, const Space& b);
};

// Wear as stored in the canonical form: ten-thousandths, rounded half away
// from zero.
std::int64_t QuantizeWear(double wear);
double RoundWear(double wear);
// The residue text of the space file: QuantizeWear as a 4-decimal number.
std::string FormatWear(double wear);

EditResult<Space> NewSpace(std::string space_id, std::string name,
                           std::uint64_t seed, const GridSpec& grid);

EditResult<void> SetTerrain(Space& space, Cell cell, Terrain terrain);
EditResult<void> SetWall(Space& space, const WallEdge& edge, bool present);
EditResult<ItemId> PlaceItem(Space& space, ItemKind kind, Cell cell);
EditResult<void> MoveItem(Space& space, ItemId id, Cell to);
EditResult<void> RemoveItem(Space& space, ItemId id);
void SetTimeOfDay(Space& space, TimeOfDay t);

// Every invariant violation found, in a stable order; empty means valid.
std::vector<std::string> ValidateSpace(const Space& space);

}  // namespace slowspace

#endif  // SLOWSPACE_SCENE_SPACE_H_
