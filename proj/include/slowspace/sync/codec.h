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

#ifndef SLOWSPACE_SYNC_CODEC_H_
#define SLOWSPACE_SYNC_CODEC_H_

#include <string>
#include <string_view>

#include "slowspace/sync/edit_op.h"
#include "slowspace/sync/envelope.h"
#include "slowspace/util/canonical_json.h"
#include "slowspace/util/json_read.h"

namespace slowspace::sync {

// Every envelope is a canonical JSON object {"t":tag,"v":1,...payload}.
// Edit ops nest as {"op":"set_terrain"|"set_wall"|"place"|"move"|"remove"|
// "set_time", ...} with field encodings shared with the space file. The
// Welcome snapshot is the space file object inlined verbatim.
//
// Decoding is total: any byte string yields an envelope or a DecodeError.
// Unknown tags, unknown fields and a "v" other than 1 are errors; a Hello's
// proto_version is not checked here.
std::string Encode(const Envelope& envelope);
Expected<Envelope, DecodeError> Decode(std::string_view bytes);

void WriteEditOp(CanonicalJsonWriter& w, const EditOp& op);
// Throws json_read::SchemaError.
EditOp EditOpFromJson(const json_read::Json& j);

}  // namespace slowspace::sync

#endif  // SLOWSPACE_SYNC_CODEC_H_
