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

#include "slowspace/sync/codec.h"

#include "slowspace/scene/canonical.h"

namespace slowspace::sync {
namespace {

using json_read::Json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void WriteTagAndVersion(CanonicalJsonWriter& w, std::string_view tag) {
  w.Key("t");
  w.String(tag);
  w.Key("v");
  w.Int(1);
}

void WritePoint(CanonicalJsonWriter& w, const WorldPoint& p) {
  w.BeginArray();
  w.Real(p.x);
  w.Real(p.y);
  w.Real(p.z);
  w.EndArray();
}

WorldPoint PointFromJson(const Json& j, std::string_view where) {
  const Json& a = json_read::GetArray(j, where, 3);
  return WorldPoint{json_read::GetReal(a[0], where),
                    json_read::GetReal(a[1], where),
                    json_read::GetReal(a[2], where)};
}

}  // namespace

std::string_view EnvelopeTag(const Envelope& e) {
  static constexpr std::string_view kTags[] = {
      "hello", "submit",     "presence", "welcome", "op",
      "reject", "presence_b", "residue",  "error"};
  return kTags[e.index()];
}

void WriteEditOp(CanonicalJsonWriter& w, const EditOp& op) {
  w.BeginObject();
  std::visit(Overloaded{
                 [&](const SetTerrainOp& o) {
                   w.Key("cell");
                   WriteCell(w, o.cell);
                   w.Key("op");
                   w.String("set_terrain");
                   w.Key("terrain");
                   w.String(TerrainCode(o.terrain));
                 },
                 [&](const SetWallOp& o) {
                   w.Key("edge");
                   WriteWallEdge(w, o.edge);
                   w.Key("op");
                   w.String("set_wall");
                   w.Key("present");
                   w.Bool(o.present);
                 },
                 [&](const PlaceItemOp& o) {
                   w.Key("cell");
                   WriteCell(w, o.cell);
                   w.Key("kind");
                   w.String(ItemKindName(o.kind));
                   w.Key("op");
                   w.String("place");
                 },
                 [&](const MoveItemOp& o) {
                   w.Key("item_id");
                   w.Uint(o.item_id);
                   w.Key("op");
                   w.String("move");
                   w.Key("to_cell");
                   WriteCell(w, o.to_cell);
                 },
                 [&](const RemoveItemOp& o) {
                   w.Key("item_id");
                   w.Uint(o.item_id);
                   w.Key("op");
                   w.String("remove");
                 },
                 [&](const SetTimeOfDayOp& o) {
                   w.Key("op");
                   w.String("set_time");
                   w.Key("time_of_day");
                   w.String(TimeOfDayName(o.time_of_day));
                 },
             },
             op);
  w.EndObject();
}

EditOp EditOpFromJson(const Json& j) {
  using namespace json_read;
  if (!j.is_object() || !j.contains("op")) Fail("op", "expected edit op object");
  const std::string kind = GetString(Field(j, "op"), "op.op");
  if (kind == "set_terrain") {
    ExpectObject(j, "op", {"op", "cell", "terrain"});
    return SetTerrainOp{CellFromJson(Field(j, "cell"), "op.cell"),
                        TerrainFromJson(Field(j, "terrain"), "op.terrain")};
  }
  if (kind == "set_wall") {
    ExpectObject(j, "op", {"op", "edge", "present"});
    return SetWallOp{WallEdgeFromJson(Field(j, "edge"), "op.edge"),
                     GetBool(Field(j, "present"), "op.present")};
  }
  if (kind == "place") {
    ExpectObject(j, "op", {"op", "kind", "cell"});
    return PlaceItemOp{ItemKindFromJson(Field(j, "kind"), "op.kind"),
                       CellFromJson(Field(j, "cell"), "op.cell")};
  }
  if (kind == "move") {
    ExpectObject(j, "op", {"op", "item_id", "to_cell"});
    return MoveItemOp{GetU64(Field(j, "item_id"), "op.item_id"),
                      CellFromJson(Field(j, "to_cell"), "op.to_cell")};
  }
  if (kind == "remove") {
    ExpectObject(j, "op", {"op", "item_id"});
    return RemoveItemOp{GetU64(Field(j, "item_id"), "op.item_id")};
  }
  if (kind == "set_time") {
    ExpectObject(j, "op", {"op", "time_of_day"});
    return SetTimeOfDayOp{
        TimeOfDayFromJson(Field(j, "time_of_day"), "op.time_of_day")};
  }
  Fail("op.op", "unknown edit op \"" + kind + "\"");
}

std::string Encode(const Envelope& envelope) {
  CanonicalJsonWriter w;
  w.BeginObject();
  const std::string_view tag = EnvelopeTag(envelope);
  std::visit(Overloaded{
                 [&](const Hello& m) {
                   w.Key("client_name");
                   w.String(m.client_name);
                   w.Key("proto_version");
                   w.Uint(m.proto_version);
                   w.Key("space_id");
                   w.String(m.space_id);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const SubmitOp& m) {
                   w.Key("client_op_id");
                   w.Uint(m.client_op_id);
                   w.Key("op");
                   WriteEditOp(w, m.op);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const PresenceReport& m) {
                   w.Key("dwell_s");
                   w.Real(m.dwell_s);
                   w.Key("position");
                   WritePoint(w, m.position);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const Welcome& m) {
                   w.Key("client_id");
                   w.Uint(m.client_id);
                   w.Key("seq");
                   w.Uint(m.seq);
                   w.Key("snapshot");
                   WriteSpace(w, m.snapshot);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const OpApplied& m) {
                   if (m.assigned_item_id) {
                     w.Key("assigned_item_id");
                     w.Uint(*m.assigned_item_id);
                   }
                   w.Key("client_op_id");
                   w.Uint(m.client_op_id);
                   w.Key("op");
                   WriteEditOp(w, m.op);
                   w.Key("origin_client");
                   w.Uint(m.origin_client);
                   w.Key("seq");
                   w.Uint(m.seq);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const Rejected& m) {
                   w.Key("client_op_id");
                   w.Uint(m.client_op_id);
                   w.Key("reason");
                   w.String(m.reason);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const PresenceBroadcast& m) {
                   w.Key("cell");
                   WriteCell(w, m.cell);
                   w.Key("client_id");
                   w.Uint(m.client_id);
                   WriteTagAndVersion(w, tag);
                 },
                 [&](const ResidueDelta& m) {
                   w.Key("cell");
                   WriteCell(w, m.cell);
                   WriteTagAndVersion(w, tag);
                   w.Key("wear");
                   w.Real(m.wear);
                 },
                 [&](const Error& m) {
                   w.Key("code");
                   w.String(m.code);
                   w.Key("detail");
                   w.String(m.detail);
                   WriteTagAndVersion(w, tag);
                 },
             },
             envelope);
  w.EndObject();
  return w.Take();
}

namespace {

Envelope EnvelopeFromJson(const Json& j) {
  using namespace json_read;
  if (!j.is_object()) Fail("envelope", "expected object");
  if (!j.contains("t")) Fail("envelope", "missing field \"t\"");
  if (!j.contains("v")) Fail("envelope", "missing field \"v\"");
  if (GetU64(Field(j, "v"), "v") != 1) Fail("v", "unsupported envelope version");
  const std::string tag = GetString(Field(j, "t"), "t");

  if (tag == "hello") {
    ExpectObject(j, tag, {"t", "v", "proto_version", "space_id", "client_name"});
    return Hello{GetU64(Field(j, "proto_version"), "proto_version"),
                 GetString(Field(j, "space_id"), "space_id"),
                 GetString(Field(j, "client_name"), "client_name")};
  }
  if (tag == "submit") {
    ExpectObject(j, tag, {"t", "v", "client_op_id", "op"});
    return SubmitOp{GetU64(Field(j, "client_op_id"), "client_op_id"),
                    EditOpFromJson(Field(j, "op"))};
  }
  if (tag == "presence") {
    ExpectObject(j, tag, {"t", "v", "position", "dwell_s"});
    return PresenceReport{PointFromJson(Field(j, "position"), "position"),
                          GetReal(Field(j, "dwell_s"), "dwell_s")};
  }
  if (tag == "welcome") {
    ExpectObject(j, tag, {"t", "v", "client_id", "snapshot", "seq"});
    return Welcome{GetU64(Field(j, "client_id"), "client_id"),
                   SpaceFromJson(Field(j, "snapshot")),
                   GetU64(Field(j, "seq"), "seq")};
  }
  if (tag == "op") {
    ExpectObject(j, tag, {"t", "v", "seq", "origin_client", "client_op_id", "op"},
                 {"assigned_item_id"});
    OpApplied m;
    m.seq = GetU64(Field(j, "seq"), "seq");
    m.origin_client = GetU64(Field(j, "origin_client"), "origin_client");
    m.client_op_id = GetU64(Field(j, "client_op_id"), "client_op_id");
    m.op = EditOpFromJson(Field(j, "op"));
    const bool is_place = std::holds_alternative<PlaceItemOp>(m.op);
    if (j.contains("assigned_item_id")) {
      if (!is_place) Fail("assigned_item_id", "only valid for place ops");
      m.assigned_item_id =
          GetU64(Field(j, "assigned_item_id"), "assigned_item_id");
    } else if (is_place) {
      Fail("assigned_item_id", "required for place ops");
    }
    return m;
  }
  if (tag == "reject") {
    ExpectObject(j, tag, {"t", "v", "client_op_id", "reason"});
    return Rejected{GetU64(Field(j, "client_op_id"), "client_op_id"),
                    GetString(Field(j, "reason"), "reason")};
  }
  if (tag == "presence_b") {
    ExpectObject(j, tag, {"t", "v", "client_id", "cell"});
    return PresenceBroadcast{GetU64(Field(j, "client_id"), "client_id"),
                             CellFromJson(Field(j, "cell"), "cell")};
  }
  if (tag == "residue") {
    ExpectObject(j, tag, {"t", "v", "cell", "wear"});
    return ResidueDelta{CellFromJson(Field(j, "cell"), "cell"),
                        GetReal(Field(j, "wear"), "wear")};
  }
  if (tag == "error") {
    ExpectObject(j, tag, {"t", "v", "code", "detail"});
    return Error{GetString(Field(j, "code"), "code"),
                 GetString(Field(j, "detail"), "detail")};
  }
  Fail("t", "unknown message tag \"" + tag + "\"");
}

}  // namespace

Expected<Envelope, DecodeError> Decode(std::string_view bytes) {
  auto parsed = json_read::Parse(bytes);
  if (!parsed) return MakeUnexpected(parsed.error());
  try {
    return EnvelopeFromJson(*parsed);
  } catch (const json_read::SchemaError& e) {
    return MakeUnexpected(DecodeError{0, e.what()});
  } catch (const std::exception& e) {
    // Should be unreachable; keeps decoding total.
    return MakeUnexpected(DecodeError{0, e.what()});
  }
}

}  // namespace slowspace::sync
