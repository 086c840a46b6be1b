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

#include "slowspace/scene/canonical.h"

#include "gtest/gtest.h"
#include "slowspace/sync/edit_op.h"
#include "test_support.h"

namespace slowspace {
namespace {

using testing::OracleValues;
using testing::ReadGolden;

Space Fresh() { return *NewSpace("s1", "demo", 42, GridSpec{16, 16, 2.0}); }

TEST(Fnv1a64Test, KnownValues) {
  EXPECT_EQ(Fnv1a64(""), 14695981039346656037ULL);
  EXPECT_EQ(Fnv1a64(""), OracleValues()["fnv_empty"].get<std::uint64_t>());
  EXPECT_EQ(Fnv1a64("a"), OracleValues()["fnv_a"].get<std::uint64_t>());
}

TEST(CanonicalBytesTest, FreshSpaceMatchesOracleGolden) {
  EXPECT_EQ(CanonicalBytes(Fresh()), ReadGolden("fresh_16x16_seed42.json"));
  EXPECT_EQ(SceneHash(Fresh()), OracleValues()["fresh_hash"].get<std::uint64_t>());
}

TEST(CanonicalBytesTest, KeyOrderAndLayout) {
  Space s = *NewSpace("x", "n", 7, GridSpec{2, 1, 0.5});
  ASSERT_TRUE(SetWall(s, {Orientation::kV, 2, 0}, true));
  ASSERT_TRUE(SetWall(s, {Orientation::kH, 1, 1}, true));
  ASSERT_TRUE(SetWall(s, {Orientation::kH, 0, 1}, true));
  ASSERT_TRUE(PlaceItem(s, ItemKind::kFlowerPatch, {1, 0}));
  ASSERT_TRUE(SetTerrain(s, {1, 0}, Terrain::kWater));
  s.residue[0] = 0.25;
  EXPECT_EQ(CanonicalBytes(s),
            R"({"format":"slowspace","grid":{"cell_size":0.5,"height":1,"width":2},)"
            R"("items":[{"cell":[1,0],"id":1,"kind":"flower_patch"}],"name":"n",)"
            R"("next_item_id":2,"op_seq":0,"residue":[0.2500,0.0000],"seed":7,)"
            R"("space_id":"x","terrain":["g","w"],"time_of_day":"morning","version":1,)"
            R"("walls":[["H",0,1],["H",1,1],["V",2,0]]})");
}

TEST(CanonicalBytesTest, DifferentWallsDifferentBytes) {
  Space a = Fresh();
  Space b = Fresh();
  ASSERT_TRUE(SetWall(b, {Orientation::kH, 0, 0}, true));
  EXPECT_NE(CanonicalBytes(a), CanonicalBytes(b));
  EXPECT_NE(SceneHash(a), SceneHash(b));
}

TEST(DecodeSpaceTest, AcceptsNonCanonicalLayout) {
  const std::string pretty = R"({
    "version": 1, "format": "slowspace", "space_id": "x", "name": "n", "seed": 7,
    "grid": {"width": 1, "height": 1, "cell_size": 2},
    "time_of_day": "night", "terrain": ["r"], "walls": [], "items": [],
    "residue": [0.5], "next_item_id": 1, "op_seq": 3 })";
  auto s = DecodeSpace(pretty);
  ASSERT_TRUE(s) << s.error().reason;
  EXPECT_EQ(s->time_of_day, TimeOfDay::kNight);
  EXPECT_EQ(s->grid.cell_size, 2.0);
  EXPECT_EQ(s->op_seq, 3u);
}

TEST(DecodeSpaceTest, RejectsSchemaViolations) {
  const std::string good = CanonicalBytes(Fresh());
  auto with = [&](std::string from, std::string to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_FALSE(DecodeSpace(with("\"format\":\"slowspace\"", "\"format\":\"other\"")));
  EXPECT_FALSE(DecodeSpace(with("\"version\":1", "\"version\":2")));
  EXPECT_FALSE(DecodeSpace(with("\"seed\":42", "\"seed\":-42")));
  EXPECT_FALSE(DecodeSpace(with("\"time_of_day\":\"morning\"", "\"time_of_day\":\"noon\"")));
  EXPECT_FALSE(DecodeSpace(with("\"terrain\":[\"g\"", "\"terrain\":[\"x\"")));
  EXPECT_FALSE(DecodeSpace(with("\"walls\":[]", "\"walls\":[[\"D\",0,0]]")));
  EXPECT_FALSE(DecodeSpace(with("\"walls\":[]", "\"walls\":[[\"H\",0,0],[\"H\",0,0]]")));
  EXPECT_FALSE(DecodeSpace(with("\"op_seq\":0", "\"op_seq\":0,\"extra\":1")));
  EXPECT_FALSE(DecodeSpace(with("\"items\":[]", "\"items\":[{\"id\":1,\"kind\":\"dragon\",\"cell\":[0,0]}]")));
  EXPECT_FALSE(DecodeSpace(good.substr(0, good.size() - 1)));
  EXPECT_TRUE(DecodeSpace(good));
}

TEST(DecodeSpaceTest, SchemaErrorsHavePositionZeroAndSyntaxErrorsDoNot) {
  auto schema = DecodeSpace("{}");
  ASSERT_FALSE(schema);
  EXPECT_EQ(schema.error().position, 0u);
  auto syntax = DecodeSpace("{\"a\":");
  ASSERT_FALSE(syntax);
  EXPECT_GT(syntax.error().position, 0u);
}

TEST(CanonicalPropertyTest, EncodeDecodeEncodeIsAFixpoint) {
  pcg::SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Space s = testing::RandomSpace(rng, 60);
    const std::string bytes = CanonicalBytes(s);
    auto decoded = DecodeSpace(bytes);
    ASSERT_TRUE(decoded) << decoded.error().reason;
    EXPECT_EQ(*decoded, s);
    EXPECT_EQ(CanonicalBytes(*decoded), bytes);
  }
}

TEST(CanonicalPropertyTest, EqualBytesIffEqualSpaces) {
  pcg::SplitMix64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    Space a = testing::RandomSpace(rng, 10, 4);
    Space b = a;
    // One small perturbation, sometimes a no-op.
    switch (rng.NextBelow(5)) {
      case 0:
        (void)sync::Apply(b, testing::RandomEditOp(rng, b));
        break;
      case 1:
        b.residue[rng.NextBelow(b.residue.size())] += rng.NextUnit() * 0.0002;
        break;
      case 2:
        b.op_seq += rng.NextBelow(2);
        break;
      case 3:
        b.name += rng.NextBelow(2) == 0 ? "" : "x";
        break;
      default:
        b.seed ^= rng.NextBelow(2);
        break;
    }
    const bool same_bytes = CanonicalBytes(a) == CanonicalBytes(b);
    EXPECT_EQ(same_bytes, a == b);
    EXPECT_EQ(same_bytes, SceneHash(a) == SceneHash(b));
  }
}

}  // namespace
}  // namespace slowspace
