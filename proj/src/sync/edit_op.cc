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

#include "slowspace/sync/edit_op.h"

namespace slowspace::sync {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

EditResult<Applied> FromVoid(EditResult<void> r) {
  if (!r) return MakeUnexpected(r.error());
  return Applied{};
}

}  // namespace

EditResult<Applied> Apply(Space& space, const EditOp& op) {
  return std::visit(
      Overloaded{
          [&](const SetTerrainOp& o) {
            return FromVoid(SetTerrain(space, o.cell, o.terrain));
          },
          [&](const SetWallOp& o) {
            return FromVoid(SetWall(space, o.edge, o.present));
          },
          [&](const PlaceItemOp& o) -> EditResult<Applied> {
            auto id = PlaceItem(space, o.kind, o.cell);
            if (!id) return MakeUnexpected(id.error());
            return Applied{*id};
          },
          [&](const MoveItemOp& o) {
            return FromVoid(MoveItem(space, o.item_id, o.to_cell));
          },
          [&](const RemoveItemOp& o) {
            return FromVoid(RemoveItem(space, o.item_id));
          },
          [&](const SetTimeOfDayOp& o) -> EditResult<Applied> {
            SetTimeOfDay(space, o.time_of_day);
            return Applied{};
          },
      },
      op);
}

std::optional<ItemId> ReferencedItem(const EditOp& op) {
  if (const auto* m = std::get_if<MoveItemOp>(&op)) return m->item_id;
  if (const auto* r = std::get_if<RemoveItemOp>(&op)) return r->item_id;
  return std::nullopt;
}

EditOp WithReferencedItem(const EditOp& op, ItemId id) {
  EditOp out = op;
  if (auto* m = std::get_if<MoveItemOp>(&out)) m->item_id = id;
  if (auto* r = std::get_if<RemoveItemOp>(&out)) r->item_id = id;
  return out;
}

}  // namespace slowspace::sync
