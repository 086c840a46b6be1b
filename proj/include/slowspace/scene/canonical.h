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

#ifndef SLOWSPACE_SCENE_CANONICAL_H_
#define SLOWSPACE_SCENE_CANONICAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "slowspace/scene/space.h"
#include "slowspace/util/canonical_json.h"
#include "slowspace/util/json_read.h"

namespace slowspace {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t Fnv1a64(std::string_view bytes);

// The space file: one JSON object, keys ascending, no whitespace, walls
// sorted by (orientation, x, y), items by id, residue with exactly four
// decimals, cell_size as the shortest round-tripping decimal.
//
//   {"format":"slowspace","grid":{"cell_size":2.0,"height":16,"width":16},
//    "items":[{"cell":[3,2],"id":1,"kind":"tree"}],"name":"demo",
//    "next_item_id":2,"op_seq":1,"residue":[0.0000,...],"seed":42,
//    "space_id":"s1","terrain":["g",...],"time_of_day":"morning",
//    "version":1,"walls":[["H",0,0]]}
//
// This exact byte string is the snapshot payload on the wire and the input
// to SceneHash.
std::string CanonicalBytes(const Space& space);
void WriteSpace(CanonicalJsonWriter& w, const Space& space);

std::uint64_t SceneHash(const Space& space);

// Parses a space file. Only the schema is checked here; run ValidateSpace on
// the result before trusting it.
Expected<Space, DecodeError> DecodeSpace(std::string_view bytes);
// Throws json_read::SchemaError.
Space SpaceFromJson(const json_read::Json& j);

// Shared field encodings, reused by the wire codec.
void WriteCell(CanonicalJsonWriter& w, Cell c);
void WriteWallEdge(CanonicalJsonWriter& w, const WallEdge& e);
Cell CellFromJson(const json_read::Json& j, std::string_view where);
WallEdge WallEdgeFromJson(const json_read::Json& j, std::string_view where);
Terrain TerrainFromJson(const json_read::Json& j, std::string_view where);
TimeOfDay TimeOfDayFromJson(const json_read::Json& j, std::string_view where);
ItemKind ItemKindFromJson(const json_read::Json& j, std::string_view where);

}  // namespace slowspace

#endif  // SLOWSPACE_SCENE_CANONICAL_H_
