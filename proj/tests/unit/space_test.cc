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

#include "gtest/gtest.h"
#include "slowspace/scene/canonical.h"
#include "slowspace/sync/edit_op.h"
#include "test_support.h"

namespace slowspace {
namespace {

Space Fresh(GridSpec grid = {}) { return *NewSpace("s1", "demo", 42, grid); }

TEST(NewSpaceTest, DefaultGridIsAllGrassAndEmpty) {
  const Space s = Fresh();
  EXPECT_EQ(s.terrain.size(), 256u);
  EXPECT_TRUE(std::all_of(s.terrain.begin(), s.terrain.end(),
                          [](Terrain t) { return t == Terrain::kGrass; }));
  EXPECT_TRUE(s.items.empty());
  EXPECT_TRUE(s.walls.empty());
  EXPECT_EQ(s.time_of_day, TimeOfDay::kMorning);
  EXPECT_EQ(s.residue, std::vector<double>(256, 0.0));
  EXPECT_EQ(s.next_item_id, 1u);
  EXPECT_EQ(s.op_seq, 0u);
}

TEST(NewSpaceTest, MinimalGrid) {
  const Space s = Fresh(GridSpec{1, 1, 2.0});
  ASSERT_EQ(s.terrain.size(), 1u);
  EXPECT_EQ(s.terrain[0], Terrain::kGrass);
}

TEST(NewSpaceTest, RejectsOutOfRangeGrids) {
  EXPECT_EQ(NewSpace("s", "n", 0, GridSpec{300, 16, 2.0}).error(), EditError::kInvalidGrid);
  EXPECT_FALSE(NewSpace("s", "n", 0, GridSpec{0, 16, 2.0}).has_value());
  EXPECT_FALSE(NewSpace("s", "n", 0, GridSpec{16, 257, 2.0}).has_value());
  EXPECT_FALSE(NewSpace("s", "n", 0, GridSpec{16, 16, 0.49}).has_value());
  EXPECT_FALSE(NewSpace("s", "n", 0, GridSpec{16, 16, 10.01}).has_value());
  EXPECT_TRUE(NewSpace("s", "n", 0, GridSpec{256, 256, 10.0}).has_value());
  EXPECT_TRUE(NewSpace("s", "n", 0, GridSpec{1, 1, 0.5}).has_value());
}

TEST(SetTerrainTest, WritesAbsoluteValue) {
  Space s = Fresh();
  ASSERT_TRUE(SetTerrain(s, {3, 2}, Terrain::kRock));
  EXPECT_EQ(s.TerrainAt({3, 2}), Terrain::kRock);
  ASSERT_TRUE(SetTerrain(s, {3, 2}, Terrain::kWater));
  ASSERT_TRUE(SetTerrain(s, {3, 2}, Terrain::kGrass));
  EXPECT_EQ(s.TerrainAt({3, 2}), Terrain::kGrass);
}

TEST(SetTerrainTest, OutOfBoundsLeavesSpaceUnchanged) {
  Space s = Fresh();
  const Space before = s;
  EXPECT_EQ(SetTerrain(s, {16, 0}, Terrain::kRock).error(), EditError::kOutOfBounds);
  EXPECT_EQ(SetTerrain(s, {-1, 0}, Terrain::kRock).error(), EditError::kOutOfBounds);
  EXPECT_EQ(s, before);
}

TEST(TerrainTest, CycleOrderIsGrassRockWater) {
  EXPECT_EQ(NextTerrain(Terrain::kGrass), Terrain::kRock);
  EXPECT_EQ(NextTerrain(Terrain::kRock), Terrain::kWater);
  EXPECT_EQ(NextTerrain(Terrain::kWater), Terrain::kGrass);
}

TEST(SetWallTest, IdempotentAndToggles) {
  Space s = Fresh();
  const WallEdge e{Orientation::kH, 1, 1};
  ASSERT_TRUE(SetWall(s, e, true));
  ASSERT_TRUE(SetWall(s, e, true));
  EXPECT_EQ(s.walls.size(), 1u);
  ASSERT_TRUE(SetWall(s, e, false));
  EXPECT_TRUE(s.walls.empty());
  ASSERT_TRUE(SetWall(s, e, false));
  EXPECT_TRUE(s.walls.empty());
}

TEST(SetWallTest, EdgeRangesDependOnOrientation) {
  Space s = Fresh();
  EXPECT_EQ(SetWall(s, {Orientation::kV, 17, 0}, true).error(), EditError::kOutOfBounds);
  EXPECT_TRUE(SetWall(s, {Orientation::kV, 16, 15}, true));
  EXPECT_FALSE(SetWall(s, {Orientation::kV, 16, 16}, true));
  EXPECT_TRUE(SetWall(s, {Orientation::kH, 15, 16}, true));
  EXPECT_FALSE(SetWall(s, {Orientation::kH, 16, 0}, true));
  EXPECT_FALSE(SetWall(s, {Orientation::kH, 0, -1}, true));
  EXPECT_EQ(s.walls.size(), 2u);
}

TEST(PlaceItemTest, IssuesIdsFromCounter) {
  Space s = Fresh();
  auto id = PlaceItem(s, ItemKind::kTree, {3, 2});
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, 1u);
  EXPECT_EQ(s.next_item_id, 2u);
  ASSERT_NE(s.FindItem(1), nullptr);
  EXPECT_EQ(s.FindItem(1)->cell, (Cell{3, 2}));
  EXPECT_EQ(s.FindItem(1)->kind, ItemKind::kTree);
}

TEST(PlaceItemTest, NinthItemInACellIsCellFull) {
  Space s = Fresh();
  for (int i = 0; i < kMaxItemsPerCell; ++i) {
    ASSERT_TRUE(PlaceItem(s, ItemKind::kFlowerPatch, {4, 4})) << i;
  }
  const Space before = s;
  EXPECT_EQ(PlaceItem(s, ItemKind::kFlowerPatch, {4, 4}).error(), EditError::kCellFull);
  EXPECT_EQ(s, before);
  EXPECT_EQ(s.next_item_id, 9u);
}

TEST(PlaceItemTest, WellOnOneByOneGrid) {
  Space s = Fresh(GridSpec{1, 1, 2.0});
  EXPECT_EQ(*PlaceItem(s, ItemKind::kWell, {0, 0}), 1u);
  EXPECT_EQ(PlaceItem(s, ItemKind::kWell, {1, 0}).error(), EditError::kOutOfBounds);
}

TEST(MoveItemTest, MovesKeepingIdAndKind) {
  Space s = Fresh();
  ASSERT_TRUE(PlaceItem(s, ItemKind::kBench, {3, 2}));
  ASSERT_TRUE(MoveItem(s, 1, {3, 3}));
  EXPECT_EQ(s.items.front(), (PlacedItem{1, ItemKind::kBench, {3, 3}}));
}

TEST(MoveItemTest, Errors) {
  Space s = Fresh();
  EXPECT_EQ(MoveItem(s, 99, {1, 1}).error(), EditError::kNoSuchItem);
  ASSERT_TRUE(PlaceItem(s, ItemKind::kTree, {0, 0}));
  EXPECT_EQ(MoveItem(s, 1, {0, 16}).error(), EditError::kOutOfBounds);
  for (int i = 0; i < kMaxItemsPerCell; ++i) ASSERT_TRUE(PlaceItem(s, ItemKind::kTree, {5, 5}));
  const Space before = s;
  EXPECT_EQ(MoveItem(s, 1, {5, 5}).error(), EditError::kCellFull);
  EXPECT_EQ(s, before);
}

TEST(MoveItemTest, IdentityMoveSucceedsEvenInAFullCell) {
  Space s = Fresh();
  for (int i = 0; i < kMaxItemsPerCell; ++i) ASSERT_TRUE(PlaceItem(s, ItemKind::kTree, {5, 5}));
  const Space before = s;
  EXPECT_TRUE(MoveItem(s, 3, {5, 5}));
  EXPECT_EQ(s, before);
}

TEST(RemoveItemTest, IdsAreNeverReused) {
  Space s = Fresh();
  EXPECT_EQ(*PlaceItem(s, ItemKind::kTree, {1, 1}), 1u);
  ASSERT_TRUE(RemoveItem(s, 1));
  EXPECT_EQ(s.next_item_id, 2u);
  EXPECT_EQ(*PlaceItem(s, ItemKind::kTree, {1, 1}), 2u);
}

TEST(RemoveItemTest, RemovingTwiceOrFromEmptyIsNoSuchItem) {
  Space s = Fresh();
  EXPECT_EQ(RemoveItem(s, 1).error(), EditError::kNoSuchItem);
  ASSERT_TRUE(PlaceItem(s, ItemKind::kTree, {1, 1}));
  ASSERT_TRUE(RemoveItem(s, 1));
  EXPECT_EQ(RemoveItem(s, 1).error(), EditError::kNoSuchItem);
}

TEST(SetTimeOfDayTest, AbsoluteAndCycle) {
  Space s = Fresh();
  SetTimeOfDay(s, TimeOfDay::kDusk);
  EXPECT_EQ(s.time_of_day, TimeOfDay::kDusk);
  SetTimeOfDay(s, TimeOfDay::kNight);
  SetTimeOfDay(s, TimeOfDay::kMorning);
  EXPECT_EQ(s.time_of_day, TimeOfDay::kMorning);
  const Space before = s;
  SetTimeOfDay(s, TimeOfDay::kMorning);
  EXPECT_EQ(s, before);
  EXPECT_EQ(NextTimeOfDay(TimeOfDay::kMorning), TimeOfDay::kDusk);
  EXPECT_EQ(NextTimeOfDay(TimeOfDay::kDusk), TimeOfDay::kNight);
  EXPECT_EQ(NextTimeOfDay(TimeOfDay::kNight), TimeOfDay::kMorning);
}

TEST(ValidateSpaceTest, FreshSpaceIsValid) { EXPECT_TRUE(ValidateSpace(Fresh()).empty()); }

TEST(ValidateSpaceTest, ReportsEveryViolation) {
  Space s = Fresh();
  s.residue[7] = 1.5;
  s.items.push_back(PlacedItem{1, ItemKind::kTree, {99, 0}});
  s.next_item_id = 2;
  const auto v = ValidateSpace(s);
  EXPECT_NE(std::find(v.begin(), v.end(), "residue out of range"), v.end());
  EXPECT_NE(std::find(v.begin(), v.end(), "item out of bounds"), v.end());
  EXPECT_EQ(v.size(), 2u);
}

TEST(ValidateSpaceTest, CatchesStructuralDamage) {
  Space s = Fresh();
  s.terrain.pop_back();
  s.residue.push_back(0.0);
  s.items = {PlacedItem{5, ItemKind::kTree, {0, 0}}, PlacedItem{3, ItemKind::kTree, {0, 0}}};
  s.walls.insert(WallEdge{Orientation::kV, 40, 0});
  s.name = "\xff";
  EXPECT_GE(ValidateSpace(s).size(), 6u);
  s.grid.width = 0;
  EXPECT_FALSE(ValidateSpace(s).empty());
}

TEST(WearTest, QuantizationMatchesBytes) {
  EXPECT_EQ(FormatWear(0.0), "0.0000");
  EXPECT_EQ(FormatWear(0.01), "0.0100");
  EXPECT_EQ(FormatWear(1.0), "1.0000");
  EXPECT_EQ(FormatWear(0.00005), "0.0001");
  EXPECT_EQ(FormatWear(0.99996), "1.0000");
  EXPECT_EQ(RoundWear(0.123456), 0.1235);
}

// Properties over random edit sequences.

TEST(SpacePropertyTest, ReachableSpacesValidateAndIdsStrictlyIncrease) {
  pcg::SplitMix64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    Space s = *NewSpace("p", "p", rng.Next(), testing::RandomGrid(rng, 12));
    ItemId last_issued = 0;
    for (int i = 0; i < 200; ++i) {
      const Space before = s;
      const sync::EditOp op = testing::RandomEditOp(rng, s);
      auto applied = sync::Apply(s, op);
      if (!applied) {
        ASSERT_EQ(s, before) << "failed op changed the space";
        continue;
      }
      if (applied->assigned_item_id) {
        ASSERT_GT(*applied->assigned_item_id, last_issued);
        last_issued = *applied->assigned_item_id;
      }
      ASSERT_TRUE(std::is_sorted(s.items.begin(), s.items.end(),
                                 [](auto& a, auto& b) { return a.id < b.id; }));
    }
    EXPECT_TRUE(ValidateSpace(s).empty());
    EXPECT_GT(s.next_item_id, last_issued);
  }
}

TEST(SpacePropertyTest, SuccessfulOpsChangeOnlyTheirFields) {
  pcg::SplitMix64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    Space s = testing::RandomSpace(rng, 30, 8);
    const Space before = s;
    const sync::EditOp op = testing::RandomEditOp(rng, s);
    if (!sync::Apply(s, op)) continue;
    EXPECT_EQ(s.residue, before.residue);
    EXPECT_EQ(s.op_seq, before.op_seq);
    EXPECT_EQ(s.seed, before.seed);
    if (!std::holds_alternative<sync::SetTerrainOp>(op)) EXPECT_EQ(s.terrain, before.terrain);
    if (!std::holds_alternative<sync::SetWallOp>(op)) EXPECT_EQ(s.walls, before.walls);
    if (!std::holds_alternative<sync::SetTimeOfDayOp>(op)) {
      EXPECT_EQ(s.time_of_day, before.time_of_day);
    }
    if (!std::holds_alternative<sync::PlaceItemOp>(op)) {
      EXPECT_EQ(s.next_item_id, before.next_item_id);
    }
  }
}

TEST(SpacePropertyTest, AbsoluteWritesAreLastWriterWins) {
  pcg::SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Space a = testing::RandomSpace(rng, 20, 8);
    Space b = a;
    const Cell c = testing::RandomCell(rng, a.grid);
    const auto t1 = static_cast<Terrain>(rng.NextBelow(3));
    const auto t2 = static_cast<Terrain>(rng.NextBelow(3));
    ASSERT_TRUE(SetTerrain(a, c, t1));
    ASSERT_TRUE(SetTerrain(a, c, t2));
    ASSERT_TRUE(SetTerrain(b, c, t2));
    EXPECT_EQ(a, b);
    SetTimeOfDay(a, TimeOfDay::kNight);
    SetTimeOfDay(a, TimeOfDay::kDusk);
    SetTimeOfDay(b, TimeOfDay::kDusk);
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace slowspace
