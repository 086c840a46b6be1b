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

#include <string>

namespace slowspace {

using json_read::Json;

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = kFnvOffsetBasis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

void WriteCell(CanonicalJsonWriter& w, Cell c) {
  w.BeginArray();
  w.Int(c.x);
  w.Int(c.y);
  w.EndArray();
}

void WriteWallEdge(CanonicalJsonWriter& w, const WallEdge& e) {
  w.BeginArray();
  w.String(e.orientation == Orientation::kH ? "H" : "V");
  w.Int(e.x);
  w.Int(e.y);
  w.EndArray();
}

void WriteSpace(CanonicalJsonWriter& w, const Space& space) {
  w.BeginObject();
  w.Key("format");
  w.String("slowspace");
  w.Key("grid");
  w.BeginObject();
  w.Key("cell_size");
  w.Real(space.grid.cell_size);
  w.Key("height");
  w.Int(space.grid.height);
  w.Key("width");
  w.Int(space.grid.width);
  w.EndObject();
  w.Key("items");
  w.BeginArray();
  for (const PlacedItem& item : space.items) {
    w.BeginObject();
    w.Key("cell");
    WriteCell(w, item.cell);
    w.Key("id");
    w.Uint(item.id);
    w.Key("kind");
    w.String(ItemKindName(item.kind));
    w.EndObject();
  }
  w.EndArray();
  w.Key("name");
  w.String(space.name);
  w.Key("next_item_id");
  w.Uint(space.next_item_id);
  w.Key("op_seq");
  w.Uint(space.op_seq);
  w.Key("residue");
  w.BeginArray();
  for (double wear : space.residue) w.Raw(FormatWear(wear));
  w.EndArray();
  w.Key("seed");
  w.Uint(space.seed);
  w.Key("space_id");
  w.String(space.space_id);
  w.Key("terrain");
  w.BeginArray();
  for (Terrain t : space.terrain) w.String(TerrainCode(t));
  w.EndArray();
  w.Key("time_of_day");
  w.String(TimeOfDayName(space.time_of_day));
  w.Key("version");
  w.Int(1);
  w.Key("walls");
  w.BeginArray();
  for (const WallEdge& e : space.walls) WriteWallEdge(w, e);  // std::set order
  w.EndArray();
  w.EndObject();
}

std::string CanonicalBytes(const Space& space) {
  CanonicalJsonWriter w;
  WriteSpace(w, space);
  return w.Take();
}

std::uint64_t SceneHash(const Space& space) {
  return Fnv1a64(CanonicalBytes(space));
}

Cell CellFromJson(const Json& j, std::string_view where) {
  const Json& a = json_read::GetArray(j, where, 2);
  return Cell{json_read::GetI32(a[0], where), json_read::GetI32(a[1], where)};
}

WallEdge WallEdgeFromJson(const Json& j, std::string_view where) {
  const Json& a = json_read::GetArray(j, where, 3);
  std::string o = json_read::GetString(a[0], where);
  WallEdge e;
  if (o == "H") {
    e.orientation = Orientation::kH;
  } else if (o == "V") {
    e.orientation = Orientation::kV;
  } else {
    json_read::Fail(where, "orientation must be \"H\" or \"V\"");
  }
  e.x = json_read::GetI32(a[1], where);
  e.y = json_read::GetI32(a[2], where);
  return e;
}

Terrain TerrainFromJson(const Json& j, std::string_view where) {
  auto t = TerrainFromCode(json_read::GetString(j, where));
  if (!t) json_read::Fail(where, "unknown terrain code");
  return *t;
}

TimeOfDay TimeOfDayFromJson(const Json& j, std::string_view where) {
  auto t = TimeOfDayFromName(json_read::GetString(j, where));
  if (!t) json_read::Fail(where, "unknown time of day");
  return *t;
}

ItemKind ItemKindFromJson(const Json& j, std::string_view where) {
  auto k = ItemKindFromName(json_read::GetString(j, where));
  if (!k) json_read::Fail(where, "unknown item kind");
  return *k;
}

Space SpaceFromJson(const Json& j) {
  using namespace json_read;
  ExpectObject(j, "space",
               {"format", "version", "space_id", "name", "seed", "grid",
                "time_of_day", "terrain", "walls", "items", "residue",
                "next_item_id", "op_seq"});
  if (GetString(Field(j, "format"), "format") != "slowspace") {
    Fail("format", "expected \"slowspace\"");
  }
  if (GetU64(Field(j, "version"), "version") != 1) {
    Fail("version", "unsupported version");
  }
  Space s;
  s.space_id = GetString(Field(j, "space_id"), "space_id");
  s.name = GetString(Field(j, "name"), "name");
  s.seed = GetU64(Field(j, "seed"), "seed");

  const Json& grid = Field(j, "grid");
  ExpectObject(grid, "grid", {"width", "height", "cell_size"});
  s.grid.width = GetI32(Field(grid, "width"), "grid.width");
  s.grid.height = GetI32(Field(grid, "height"), "grid.height");
  s.grid.cell_size = GetReal(Field(grid, "cell_size"), "grid.cell_size");

  s.time_of_day = TimeOfDayFromJson(Field(j, "time_of_day"), "time_of_day");

  for (const Json& t : GetArray(Field(j, "terrain"), "terrain")) {
    s.terrain.push_back(TerrainFromJson(t, "terrain[]"));
  }
  for (const Json& e : GetArray(Field(j, "walls"), "walls")) {
    if (!s.walls.insert(WallEdgeFromJson(e, "walls[]")).second) {
      Fail("walls", "duplicate edge");
    }
  }
  for (const Json& item : GetArray(Field(j, "items"), "items")) {
    ExpectObject(item, "items[]", {"id", "kind", "cell"});
    s.items.push_back(PlacedItem{GetU64(Field(item, "id"), "items[].id"),
                                 ItemKindFromJson(Field(item, "kind"), "items[].kind"),
                                 CellFromJson(Field(item, "cell"), "items[].cell")});
  }
  for (const Json& w : GetArray(Field(j, "residue"), "residue")) {
    s.residue.push_back(GetReal(w, "residue[]"));
  }
  s.next_item_id = GetU64(Field(j, "next_item_id"), "next_item_id");
  s.op_seq = GetU64(Field(j, "op_seq"), "op_seq");
  return s;
}

Expected<Space, DecodeError> DecodeSpace(std::string_view bytes) {
  auto parsed = json_read::Parse(bytes);
  if (!parsed) return MakeUnexpected(parsed.error());
  try {
    return SpaceFromJson(*parsed);
  } catch (const json_read::SchemaError& e) {
    return MakeUnexpected(DecodeError{0, e.what()});
  }
}

}  // namespace slowspace
