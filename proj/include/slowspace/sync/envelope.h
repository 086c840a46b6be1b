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

#ifndef SLOWSPACE_SYNC_ENVELOPE_H_
#define SLOWSPACE_SYNC_ENVELOPE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "slowspace/scene/space.h"
#include "slowspace/sync/edit_op.h"
#include "slowspace/util/json_read.h"

namespace slowspace::sync {

using ClientId = std::uint64_t;
using ClientOpId = std::uint64_t;

inline constexpr std::uint64_t kProtoVersion = 1;

// client -> server

struct Hello {
  std::uint64_t proto_version = kProtoVersion;
  std::string space_id;
  std::string client_name;
  bool operator==(const Hello&) const = default;
};

struct SubmitOp {
  ClientOpId client_op_id = 0;
  EditOp op;
  bool operator==(const SubmitOp&) const = default;
};

struct PresenceReport {
  WorldPoint position;
  double dwell_s = 0.0;
  bool operator==(const PresenceReport&) const = default;
};

// server -> client

struct Welcome {
  ClientId client_id = 0;
  Space snapshot;
  Seq seq = 0;
  bool operator==(const Welcome&) const = default;
};

struct OpApplied {
  Seq seq = 0;
  ClientId origin_client = 0;
  ClientOpId client_op_id = 0;
  EditOp op;
  // Present iff op is a PlaceItemOp.
  std::optional<ItemId> assigned_item_id;
  bool operator==(const OpApplied&) const = default;
};

struct Rejected {
  ClientOpId client_op_id = 0;
  std::string reason;
  bool operator==(const Rejected&) const = default;
};

struct PresenceBroadcast {
  ClientId client_id = 0;
  Cell cell;
  bool operator==(const PresenceBroadcast&) const = default;
};

struct ResidueDelta {
  Cell cell;
  double wear = 0.0;
  bool operator==(const ResidueDelta&) const = default;
};

struct Error {
  std::string code;
  std::string detail;
  bool operator==(const Error&) const = default;
};

using Envelope = std::variant<Hello, SubmitOp, PresenceReport, Welcome,
                              OpApplied, Rejected, PresenceBroadcast,
                              ResidueDelta, Error>;

// Wire tag: "hello", "submit", "presence", "welcome", "op", "reject",
// "presence_b", "residue", "error".
std::string_view EnvelopeTag(const Envelope& e);

}  // namespace slowspace::sync

#endif  // SLOWSPACE_SYNC_ENVELOPE_H_
