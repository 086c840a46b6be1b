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

#include "slowspace/server/op_log.h"

#include "slowspace/sync/codec.h"
#include "slowspace/util/canonical_json.h"

namespace slowspace::server {

std::string EncodeLogEntry(const LogEntry& entry) {
  CanonicalJsonWriter w;
  w.BeginObject();
  w.Key("op");
  sync::WriteEditOp(w, entry.op);
  w.Key("origin");
  w.Uint(entry.origin);
  w.Key("seq");
  w.Uint(entry.seq);
  w.EndObject();
  return w.Take();
}

std::string EncodeLog(std::span<const LogEntry> log) {
  std::string out;
  for (const LogEntry& e : log) {
    out += EncodeLogEntry(e);
    out.push_back('\n');
  }
  return out;
}

Expected<std::vector<LogEntry>, DecodeError> DecodeLog(std::string_view bytes) {
  std::vector<LogEntry> out;
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    std::size_t end = bytes.find('\n', offset);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto parsed = json_read::Parse(line);
    if (!parsed) {
      return MakeUnexpected(DecodeError{line_start + parsed.error().position,
                                        parsed.error().reason});
    }
    try {
      using namespace json_read;
      ExpectObject(*parsed, "log entry", {"op", "origin", "seq"});
      out.push_back(LogEntry{GetU64(Field(*parsed, "seq"), "seq"),
                             GetU64(Field(*parsed, "origin"), "origin"),
                             sync::EditOpFromJson(Field(*parsed, "op"))});
    } catch (const json_read::SchemaError& e) {
      return MakeUnexpected(DecodeError{line_start, e.what()});
    }
  }
  return out;
}

Expected<Space, ReplayError> ReplayLog(const Space& creation,
                                       std::span<const LogEntry> log) {
  Space space = creation;
  for (const LogEntry& entry : log) {
    if (entry.seq != space.op_seq + 1) {
      return MakeUnexpected(ReplayError{
          entry.seq, "expected seq " + std::to_string(space.op_seq + 1)});
    }
    auto applied = sync::Apply(space, entry.op);
    if (!applied) {
      return MakeUnexpected(
          ReplayError{entry.seq, std::string(EditErrorName(applied.error()))});
    }
    space.op_seq = entry.seq;
  }
  return space;
}

}  // namespace slowspace::server
