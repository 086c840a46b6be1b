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

#ifndef SLOWSPACE_SYNC_EDIT_OP_H_
#define SLOWSPACE_SYNC_EDIT_OP_H_

#include <optional>
#include <string>
#include <variant>

#include "slowspace/scene/space.h"
#include "slowspace/scene/types.h"

namespace slowspace::sync {

// Edit operations are absolute writes; the wire never carries "cycle" or
// "toggle". The editor computes the next state locally.
struct SetTerrainOp {
  Cell cell;
  Terrain terrain = Terrain::kGrass;
  bool operator==(const SetTerrainOp&) const = default;
};
struct SetWallOp {
  WallEdge edge;
  bool present = true;
  bool operator==(const SetWallOp&) const = default;
};
struct PlaceItemOp {
  ItemKind kind = ItemKind::kTree;
  Cell cell;
  bool operator==(const PlaceItemOp&) const = default;
};
struct MoveItemOp {
  ItemId item_id = 0;
  Cell to_cell;
  bool operator==(const MoveItemOp&) const = default;
};
struct RemoveItemOp {
  ItemId item_id = 0;
  bool operator==(const RemoveItemOp&) const = default;
};
struct SetTimeOfDayOp {
  TimeOfDay time_of_day = TimeOfDay::kMorning;
  bool operator==(const SetTimeOfDayOp&) const = default;
};

using EditOp = std::variant<SetTerrainOp, SetWallOp, PlaceItemOp, MoveItemOp,
                            RemoveItemOp, SetTimeOfDayOp>;

// Result of applying an op: for PlaceItem the id the space issued.
struct Applied {
  std::optional<ItemId> assigned_item_id;
};

// Dispatches onto the scene-model edit. The space's op_seq is not touched;
// sequencing belongs to whoever orders the ops. On failure the space is
// unchanged and the error's name is the rejection reason.
EditResult<Applied> Apply(Space& space, const EditOp& op);

// The item id an op refers to, if any (Move/Remove).
std::optional<ItemId> ReferencedItem(const EditOp& op);
// Same op with its referenced item id replaced.
EditOp WithReferencedItem(const EditOp& op, ItemId id);

}  // namespace slowspace::sync

#endif  // SLOWSPACE_SYNC_EDIT_OP_H_
